#include "abcdoo/cli.hpp"

int main(int argc, char** argv) { return abcdoo::cli::main(argc, argv); }
