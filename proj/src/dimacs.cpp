#include "happycol/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "happycol/errors.hpp"
#include "happycol/rng.hpp"

namespace happycol {

namespace {

std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

[[noreturn]] void fail(const std::string& context, std::size_t line_no, const std::string& what) {
    throw IoError(context + ":" + std::to_string(line_no) + ": " + what);
}

} // namespace

Instance make_instance(const SbmParams& params) {
    Instance instance;
    instance.params = params;
    auto [graph, communities] = sample_graph(params);
    instance.graph = std::move(graph);
    instance.communities = std::move(communities);
    instance.precolouring = sample_precolouring(instance.communities, params.pcc, subseed(params.seed, 0));
    return instance;
}

std::string format_instance(const Instance& instance) {
    const auto& params = instance.params;
    std::ostringstream out;
    out << "c happy-sbm v1\n";
    out << "c params n=" << params.n << " k=" << params.k << " p=" << shortest(params.p)
        << " q=" << shortest(params.q) << " pcc=" << params.pcc << " seed=" << params.seed << "\n";
    out << "p edge " << instance.graph.vertex_count() << " " << instance.graph.edge_count() << "\n";
    for (const auto& [u, v] : instance.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    for (Vertex v = 0; v < instance.communities.size(); ++v)
        out << "c community " << v + 1 << " " << instance.communities.community(v) << "\n";
    for (Vertex v = 0; v < instance.precolouring.size(); ++v)
        if (instance.precolouring.is_coloured(v))
            out << "c precolour " << v + 1 << " " << instance.precolouring.colour(v) << "\n";
    return out.str();
}

Instance parse_instance(std::istream& in, const std::string& context) {
    std::int64_t n = -1;
    std::int64_t m = -1;
    bool have_params = false;
    SbmParams params;
    std::vector<Edge> edges;
    std::vector<Colour> communities;
    std::vector<std::pair<Vertex, Colour>> precolours;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge") fail(context, line_no, "malformed problem line");
            if (n < 0 || m < 0) fail(context, line_no, "negative sizes in problem line");
            communities.assign(static_cast<std::size_t>(n), 0);
        } else if (tag == "e") {
            std::int64_t u = 0;
            std::int64_t v = 0;
            if (!(ls >> u >> v)) fail(context, line_no, "malformed edge line");
            if (n < 0) fail(context, line_no, "edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n) fail(context, line_no, "edge endpoint out of range");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else if (tag == "c") {
            std::string kind;
            ls >> kind;
            if (kind == "params") {
                std::string pair;
                while (ls >> pair) {
                    const auto eq = pair.find('=');
                    if (eq == std::string::npos) fail(context, line_no, "malformed params entry '" + pair + "'");
                    const std::string key = pair.substr(0, eq);
                    const std::string value = pair.substr(eq + 1);
                    try {
                        if (key == "n") params.n = std::stoll(value);
                        else if (key == "k") params.k = static_cast<Colour>(std::stol(value));
                        else if (key == "p") params.p = std::stod(value);
                        else if (key == "q") params.q = std::stod(value);
                        else if (key == "pcc") params.pcc = std::stoll(value);
                        else if (key == "seed") params.seed = std::stoull(value);
                    } catch (const std::exception&) {
                        fail(context, line_no, "malformed params value '" + pair + "'");
                    }
                }
                have_params = true;
            } else if (kind == "community") {
                std::int64_t v = 0;
                std::int64_t label = 0;
                if (!(ls >> v >> label)) fail(context, line_no, "malformed community line");
                if (n < 0) fail(context, line_no, "community before problem line");
                if (v < 1 || v > n) fail(context, line_no, "community vertex out of range");
                communities[static_cast<std::size_t>(v - 1)] = static_cast<Colour>(label);
            } else if (kind == "precolour") {
                std::int64_t v = 0;
                std::int64_t colour = 0;
                if (!(ls >> v >> colour)) fail(context, line_no, "malformed precolour line");
                if (n < 0) fail(context, line_no, "precolour before problem line");
                if (v < 1 || v > n) fail(context, line_no, "precolour vertex out of range");
                precolours.emplace_back(static_cast<Vertex>(v - 1), static_cast<Colour>(colour));
            }
            // other comments are ignored
        } else {
            fail(context, line_no, "unrecognised line tag '" + tag + "'");
        }
    }

    if (n < 0) fail(context, line_no, "missing problem line");
    if (!have_params) fail(context, line_no, "missing 'c params' metadata line");
    if (static_cast<std::int64_t>(edges.size()) != m)
        fail(context, line_no,
             "edge count mismatch: header says " + std::to_string(m) + ", found " + std::to_string(edges.size()));
    for (Colour c : communities)
        if (c < 1 || c > params.k) fail(context, line_no, "incomplete or out-of-range community labels");

    Instance instance;
    instance.params = params;
    try {
        instance.graph = Graph::from_edges(n, edges);
        instance.communities = CommunityAssignment(std::move(communities), params.k);
        instance.precolouring = PartialColouring(n, params.k);
        for (const auto& [v, colour] : precolours) {
            if (colour < 1 || colour > params.k) throw ParameterError("precolour outside 1..k");
            instance.precolouring.set_colour(v, colour);
        }
    } catch (const std::exception& e) {
        throw IoError(context + ": " + e.what());
    }
    return instance;
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << format_instance(instance);
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_instance(in, path.string());
}

} // namespace happycol
