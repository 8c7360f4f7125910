#include "abcdoo/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include <json.hpp>

#include "abcdoo/errors.hpp"

namespace abcdoo::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
    throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::int64_t parse_int(std::string_view field, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        bad_line(line, "expected an integer, got '" + std::string(field) + "'");
    return value;
}

std::string_view trim_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

Json recycle_json(const RecycleStats& s) {
    return Json{{"initial_offenders", s.initial_offenders},
                {"rounds", s.rounds},
                {"accepted", s.accepted},
                {"leftovers", s.leftovers}};
}

Json global_json(const GlobalRewireStats& s) {
    return Json{{"cross_duplicates", s.cross_duplicates},
                {"local_leftovers", s.local_leftovers},
                {"list_size", s.list_size},
                {"unresolved_after_pairing", s.unresolved_after_pairing},
                {"attempts", s.attempts},
                {"failed_attempts", s.failed_attempts}};
}

Json params_json(const Parameters& p) {
    return Json{{"n", p.n},         {"s0", p.s0},   {"eta", p.eta},     {"d", p.dim},   {"rho", p.rho},
                {"gamma", p.gamma}, {"delta", p.delta}, {"Delta", p.Delta}, {"beta", p.beta}, {"s", p.s},
                {"S", p.S},         {"xi", p.xi},   {"seed", p.seed}};
}

void write_ccdf(const Ecdf& ecdf, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "x,ccdf\n";
    for (std::size_t i = 0; i < ecdf.support().size(); ++i)
        out << format_number(ecdf.support()[i]) << ',' << format_number(ecdf.ccdf()[i]) << '\n';
    write_file(path, out.str());
}

void write_quantiles(std::ostream& out, const QuantileSummary& q) {
    out << q.count << ',' << format_number(q.min) << ',' << format_number(q.q25) << ',' << format_number(q.median)
        << ',' << format_number(q.q75) << ',' << format_number(q.max) << '\n';
}

} // namespace

std::string format_number(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
    for (const auto& e : edges) out << e.u + 1 << '\t' << e.v + 1 << '\n';
}

void write_provenance(std::ostream& out, const std::vector<Edge>& edges) {
    for (const auto& e : edges) out << e.u + 1 << '\t' << e.v + 1 << '\t' << e.tag << '\n';
}

void write_memberships(std::ostream& out, const std::vector<std::vector<std::uint32_t>>& node_communities) {
    for (std::size_t v = 0; v < node_communities.size(); ++v) {
        out << v + 1 << '\t';
        const auto& list = node_communities[v];
        if (list.empty()) out << '0';
        for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i] + 1;
        out << '\n';
    }
}

void write_coordinates(std::ostream& out, const GeneratedNetwork& net) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rows;
    rows.reserve(net.node_of_element.size());
    for (std::uint32_t e = 0; e < net.node_of_element.size(); ++e) rows.emplace_back(net.node_of_element[e], e);
    std::sort(rows.begin(), rows.end());
    for (const auto& [node, element] : rows) {
        out << node + 1;
        for (double x : net.points[element]) out << '\t' << format_number(x);
        out << '\n';
    }
}

std::string summary_json(const GeneratedNetwork& net) {
    const auto& s = net.summary;
    Json j;
    j["parameters"] = params_json(net.params);
    j["nodes"] = s.nodes;
    j["edges"] = s.edges;
    j["communities"] = s.communities;
    j["outliers"] = s.outliers;
    j["degree_parity_adjusted"] = s.degree_parity_adjusted;
    j["outlier_ell"] = s.outlier_ell;
    j["outlier_bound"] = s.outlier_bound;
    j["primary_size_sum"] = s.primary_size_sum;
    j["grown_size_sum"] = s.grown_size_sum;
    j["mean_memberships"] = s.mean_memberships;
    j["phi"] = s.phi;
    j["alpha"] = s.alpha;
    j["target_rho"] = s.target_rho;
    j["achieved_rho"] = s.achieved_rho;
    j["rho_reached"] = s.rho_reached;
    j["tuning_evaluations"] = s.tuning_evaluations;
    j["pairing_fallbacks"] = s.pairing_fallbacks;
    j["background_degree_fraction"] = s.background_degree_fraction;
    j["parity_fixes"] = s.parity_fixes;
    j["quota_violations"] = s.quota_violations;
    j["realized_xi"] = s.realized_xi;
    j["background_edge_fraction"] = s.background_edge_fraction;
    j["local_recycle"] = recycle_json(s.local_recycle);
    j["global_recycle"] = global_json(s.global_recycle);
    j["warnings"] = s.warnings;
    return j.dump(2) + "\n";
}

std::string timings_json(const PhaseTimings& timings) {
    Json j = Json::object();
    for (const auto& [phase, secs] : timings.seconds) j[phase] = secs;
    return j.dump(2) + "\n";
}

std::string ckb_summary_json(const CkbSpec& spec, const CkbResult& result) {
    Json j;
    j["n"] = spec.n;
    j["membership_law"] = {{"exponent", spec.membership_law.exponent},
                           {"lo", spec.membership_law.lo},
                           {"hi", spec.membership_law.hi}};
    j["size_law"] = {{"exponent", spec.size_law.exponent}, {"lo", spec.size_law.lo}, {"hi", spec.size_law.hi}};
    j["seed"] = spec.seed;
    j["communities"] = result.network.community_count;
    j["added_node_stubs"] = result.added_node_stubs;
    j["added_community_stubs"] = result.added_community_stubs;
    j["collapsed_incidences"] = result.collapsed_incidences;
    return j.dump(2) + "\n";
}

std::vector<std::vector<std::uint32_t>> read_memberships(std::istream& in) {
    std::map<std::int64_t, std::vector<std::uint32_t>> rows;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        const auto row = trim_cr(text);
        if (row.empty()) continue;
        const auto fields = split(row, '\t');
        if (fields.size() != 2) bad_line(line, "expected 'node<TAB>communities'");
        const auto node = parse_int(fields[0], line);
        if (node < 1) bad_line(line, "node ids start at 1");
        std::vector<std::uint32_t> list;
        for (auto item : split(fields[1], ',')) {
            const auto c = parse_int(item, line);
            if (c < 0 || c > std::int64_t(UINT32_MAX)) bad_line(line, "community id out of range");
            if (c > 0) list.push_back(static_cast<std::uint32_t>(c - 1));
        }
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) bad_line(line, "repeated community id");
        if (!rows.emplace(node, std::move(list)).second) bad_line(line, "duplicate node id " + std::to_string(node));
    }
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(rows.size());
    for (auto& [node, list] : rows) {
        if (node != std::int64_t(out.size()) + 1)
            throw ValidationError("unknown node id " + std::to_string(node) + ": ids must be 1.." +
                                  std::to_string(rows.size()));
        out.push_back(std::move(list));
    }
    return out;
}

std::vector<Edge> read_edges(std::istream& in, std::size_t node_count, bool& has_provenance) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::string text;
    std::size_t line = 0;
    bool all_tagged = true;
    while (std::getline(in, text)) {
        ++line;
        const auto row = trim_cr(text);
        if (row.empty()) continue;
        const auto fields = split(row, '\t');
        if (fields.size() != 2 && fields.size() != 3) bad_line(line, "expected 'u<TAB>v' or 'u<TAB>v<TAB>tag'");
        const auto u = parse_int(fields[0], line);
        const auto v = parse_int(fields[1], line);
        for (auto id : {u, v})
            if (id < 1 || id > std::int64_t(node_count)) bad_line(line, "unknown node id " + std::to_string(id));
        if (u == v) bad_line(line, "self-loop");
        std::uint32_t tag = 0;
        if (fields.size() == 3) {
            const auto t = parse_int(fields[2], line);
            if (t < 0 || t > std::int64_t(UINT32_MAX)) bad_line(line, "tag out of range");
            tag = static_cast<std::uint32_t>(t);
        } else {
            all_tagged = false;
        }
        const auto e = Edge::make(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1), tag);
        if (!seen.insert(e.key()).second) bad_line(line, "repeated edge");
        edges.push_back(e);
    }
    has_provenance = all_tagged && !edges.empty();
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
    return edges;
}

LabeledNetwork load_labeled_network(const std::filesystem::path& edges, const std::filesystem::path& memberships) {
    std::ifstream min(memberships);
    if (!min) throw ValidationError("cannot open " + memberships.string());
    std::ifstream ein(edges);
    if (!ein) throw ValidationError("cannot open " + edges.string());
    LabeledNetwork net;
    try {
        net.node_communities = read_memberships(min);
    } catch (const ValidationError& e) {
        throw ValidationError(memberships.string() + ": " + e.what());
    }
    net.node_count = net.node_communities.size();
    for (const auto& list : net.node_communities)
        if (!list.empty()) net.community_count = std::max<std::size_t>(net.community_count, list.back() + 1);
    try {
        net.edges = read_edges(ein, net.node_count, net.has_provenance);
    } catch (const ValidationError& e) {
        throw ValidationError(edges.string() + ": " + e.what());
    }
    return net;
}

LabeledNetwork to_labeled(const GeneratedNetwork& net) {
    LabeledNetwork out;
    out.node_count = net.node_count();
    out.community_count = net.community_count();
    out.edges = net.edges;
    out.node_communities = net.node_communities;
    out.has_provenance = true;
    return out;
}

std::vector<std::string> write_metric_csvs(const LabeledNetwork& net, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    auto emit_ccdf = [&](const Ecdf& e, const std::string& name) {
        write_ccdf(e, dir / name);
        written.push_back(name);
    };
    emit_ccdf(community_size_ccdf(net), "community_size_ccdf.csv");
    emit_ccdf(communities_per_node_ccdf(net), "communities_per_node_ccdf.csv");
    for (int k = 2; k <= 4; ++k)
        emit_ccdf(intersection_size_ccdf(net, k), "overlap_size_ccdf_k" + std::to_string(k) + ".csv");

    const auto profile = intersection_density_profile(net);
    {
        std::ostringstream out;
        out << "community_a,community_b,size_a,size_b,overlap,overlap_density,density_a,density_b\n";
        for (const auto& r : profile)
            out << r.community_a + 1 << ',' << r.community_b + 1 << ',' << r.size_a << ',' << r.size_b << ','
                << r.overlap << ',' << format_number(r.overlap_density) << ',' << format_number(r.density_a) << ','
                << format_number(r.density_b) << '\n';
        write_file(dir / "intersection_density.csv", out.str());
        written.push_back("intersection_density.csv");
    }
    {
        std::vector<double> overlap, community;
        for (const auto& r : profile) {
            overlap.push_back(r.overlap_density);
            community.push_back(r.density_a);
            community.push_back(r.density_b);
        }
        std::ostringstream out;
        out << "series,count,min,q25,median,q75,max\n";
        out << "overlap,";
        write_quantiles(out, summarize(overlap));
        out << "community,";
        write_quantiles(out, summarize(community));
        write_file(dir / "intersection_density_summary.csv", out.str());
        written.push_back("intersection_density_summary.csv");
    }
    {
        const auto ief = ief_top_k(net);
        std::map<std::uint32_t, std::vector<std::vector<double>>> groups;
        for (const auto& node : ief.nodes) {
            auto& ranks = groups[node.memberships];
            ranks.resize(node.top.size());
            for (std::size_t r = 0; r < node.top.size(); ++r) ranks[r].push_back(node.top[r]);
        }
        std::ostringstream out;
        out << "memberships,rank,count,min,q25,median,q75,max\n";
        for (const auto& [memberships, ranks] : groups)
            for (std::size_t r = 0; r < ranks.size(); ++r) {
                out << memberships << ',' << r + 1 << ',';
                write_quantiles(out, summarize(ranks[r]));
            }
        write_file(dir / "ief_summary.csv", out.str());
        written.push_back("ief_summary.csv");
    }
    {
        std::ostringstream out;
        out << "metric,value\n";
        out << "nodes," << net.node_count << '\n';
        out << "edges," << net.edges.size() << '\n';
        out << "communities," << net.community_count << '\n';
        std::size_t outliers = 0;
        for (const auto& list : net.node_communities) outliers += list.empty();
        out << "outliers," << outliers << '\n';
        out << "realized_xi," << format_number(realized_xi(net)) << '\n';
        const auto degrees = net.degrees();
        if (net.node_count - outliers >= 2) out << "realized_rho," << format_number(realized_rho(net, degrees)) << '\n';
        if (net.has_provenance) {
            std::size_t background = 0;
            for (const auto& e : net.edges) background += e.tag == kBackgroundTag;
            out << "provenance_background_fraction,"
                << format_number(net.edges.empty() ? 0.0 : double(background) / double(net.edges.size())) << '\n';
        }
        write_file(dir / "summary.csv", out.str());
        written.push_back("summary.csv");
    }
    return written;
}

} // namespace abcdoo::io
