#include "kvcut/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "kvcut/components.hpp"
#include "kvcut/error.hpp"

namespace kvcut {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
    Int value{};
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

struct NumberedLine {
    std::size_t number;
    std::vector<std::string_view> words;
};

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<NumberedLine> content_lines(std::string_view text) {
    std::vector<NumberedLine> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        auto words = split_words(line);
        if (!words.empty() && words.front().front() != '#') out.push_back({number, std::move(words)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

Vertex parse_vertex(const NumberedLine& line, std::string_view word, std::size_t n) {
    const auto v = parse_int<std::uint64_t>(word);
    if (!v) throw ParseError(line.number, "expected a vertex id, got '" + std::string(word) + "'");
    if (*v >= n) throw ParseError(line.number, "vertex " + std::to_string(*v) + " out of range for n = " + std::to_string(n));
    return static_cast<Vertex>(*v);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

std::string format_weight(const Weight& w) {
    if (w.denominator() == 1) return std::to_string(w.numerator());
    return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

Weight parse_weight(std::string_view text) {
    const auto bad = [&] { return InputError("malformed weight '" + std::string(text) + "'"); };
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_int<std::int64_t>(text.substr(0, slash));
        const auto den = parse_int<std::int64_t>(text.substr(slash + 1));
        if (!num || !den || *den <= 0) throw bad();
        return Weight(*num, *den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18 || !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw bad();
        const bool negative = !int_part.empty() && int_part.front() == '-';
        const std::string_view digits = negative ? int_part.substr(1) : int_part;
        std::int64_t whole = 0;
        if (!digits.empty()) {
            const auto v = parse_int<std::int64_t>(digits);
            if (!v || digits.front() == '-' || digits.front() == '+') throw bad();
            whole = *v;
        } else if (negative) {
            throw bad();
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const auto f = parse_int<std::int64_t>(frac);
        if (!f || whole > (INT64_MAX - *f) / scale) throw bad();
        const Weight w(whole * scale + *f, scale);
        return negative ? -w : w;
    }
    const auto v = parse_int<std::int64_t>(text);
    if (!v) throw bad();
    return Weight(*v);
}

Graph parse_instance(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header 'n m'");

    const NumberedLine& header = lines.front();
    if (header.words.size() != 2) throw ParseError(header.number, "header must be 'n m'");
    const auto n = parse_int<std::uint64_t>(header.words[0]);
    const auto m = parse_int<std::uint64_t>(header.words[1]);
    if (!n || !m) throw ParseError(header.number, "header must be two non-negative integers");
    if (*n > UINT32_MAX) throw ParseError(header.number, "n too large");

    std::vector<Edge> edges;
    std::vector<std::size_t> edge_line;
    std::map<Vertex, std::pair<Weight, std::size_t>> weight_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const NumberedLine& line = lines[i];
        if (line.words.front() == "w") {
            if (line.words.size() != 3) throw ParseError(line.number, "weight line must be 'w u value'");
            const Vertex v = parse_vertex(line, line.words[1], *n);
            Weight w;
            try {
                w = parse_weight(line.words[2]);
            } catch (const InputError& e) {
                throw ParseError(line.number, e.what());
            }
            if (w < Weight(0)) throw ParseError(line.number, "negative weight for vertex " + std::to_string(v));
            if (!weight_lines.emplace(v, std::make_pair(w, line.number)).second)
                throw ParseError(line.number, "second weight for vertex " + std::to_string(v));
            continue;
        }
        if (line.words.size() != 2) throw ParseError(line.number, "edge line must be 'u v'");
        const Vertex a = parse_vertex(line, line.words[0], *n);
        const Vertex b = parse_vertex(line, line.words[1], *n);
        edges.emplace_back(a, b);
        edge_line.push_back(line.number);
    }

    const std::string mismatch =
        edges.size() == *m ? std::string()
                           : "; header declares m = " + std::to_string(*m) + " but the body has " +
                                 std::to_string(edges.size()) + " edge lines";

    std::map<Edge, std::size_t> first_seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].u == edges[i].v)
            throw ParseError(edge_line[i], "self-loop at vertex " + std::to_string(edges[i].u) + mismatch);
        const auto [it, fresh] = first_seen.emplace(edges[i], edge_line[i]);
        if (!fresh)
            throw ParseError(edge_line[i], "duplicate edge " + std::to_string(edges[i].u) + " " +
                                               std::to_string(edges[i].v) + " (first on line " +
                                               std::to_string(it->second) + ")" + mismatch);
    }
    if (!mismatch.empty()) throw ParseError(header.number, mismatch.substr(2));

    std::vector<Weight> weights;
    if (!weight_lines.empty()) {
        weights.assign(*n, Weight(1));
        for (const auto& [v, entry] : weight_lines) weights[v] = entry.first;
    }
    return Graph(*n, std::move(edges), std::move(weights));
}

std::string emit_instance(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.weight(v) != Weight(1)) out += "w " + std::to_string(v) + " " + format_weight(g.weight(v)) + "\n";
    }
    return out;
}

std::string emit_dot(const Graph& g, const std::optional<VertexSet>& highlight, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (highlight && highlight->contains(v)) out += " [style=filled, fillcolor=\"#f4a261\"]";
        out += ";\n";
    }
    for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

std::string emit_gadget_mapping(const GadgetInstance& gi) {
    std::string out = "# gadget side table: U vertex -> source edge\n";
    out += "budget " + std::to_string(gi.budget) + "\n";
    out += "variant " + std::string(to_string(gi.variant)) + "\n";
    out += "origin " + std::to_string(gi.origin.order()) + " " + std::to_string(gi.origin.size()) + "\n";
    const auto& edges = gi.origin.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out += "u " + std::to_string(gi.u_of_edge[i]) + " " + std::to_string(edges[i].u) + " " +
               std::to_string(edges[i].v) + "\n";
    }
    return out;
}

GadgetMapping parse_gadget_mapping(std::string_view text) {
    const auto lines = content_lines(text);
    GadgetMapping mapping;
    std::optional<std::size_t> budget;
    std::optional<GadgetVariant> variant;
    std::optional<std::pair<std::size_t, std::size_t>> origin;
    std::vector<Edge> edges;
    std::size_t last_line = 1;

    for (const NumberedLine& line : lines) {
        last_line = line.number;
        const auto& w = line.words;
        if (w[0] == "budget" && w.size() == 2) {
            budget = parse_int<std::size_t>(w[1]);
            if (!budget) throw ParseError(line.number, "budget must be a non-negative integer");
        } else if (w[0] == "variant" && w.size() == 2) {
            variant = parse_gadget_variant(w[1]);
            if (!variant) throw ParseError(line.number, "unknown variant '" + std::string(w[1]) + "'");
        } else if (w[0] == "origin" && w.size() == 3) {
            const auto n = parse_int<std::size_t>(w[1]);
            const auto m = parse_int<std::size_t>(w[2]);
            if (!n || !m || *n > UINT32_MAX) throw ParseError(line.number, "origin must be 'origin n m'");
            origin = std::make_pair(*n, *m);
        } else if (w[0] == "u" && w.size() == 4) {
            if (!origin) throw ParseError(line.number, "'u' line before 'origin'");
            const auto x = parse_int<std::uint32_t>(w[1]);
            if (!x) throw ParseError(line.number, "expected a vertex id, got '" + std::string(w[1]) + "'");
            const Vertex a = parse_vertex(line, w[2], origin->first);
            const Vertex b = parse_vertex(line, w[3], origin->first);
            if (a == b) throw ParseError(line.number, "self-loop in source edge");
            mapping.u_table.emplace_back(*x, Edge(a, b));
            edges.emplace_back(a, b);
        } else {
            throw ParseError(line.number, "unrecognized mapping line");
        }
    }
    if (!budget || !variant || !origin) throw ParseError(last_line, "mapping needs budget, variant and origin lines");
    if (edges.size() != origin->second)
        throw ParseError(last_line, "origin declares m = " + std::to_string(origin->second) + " but the table has " +
                                        std::to_string(edges.size()) + " rows");
    mapping.budget = *budget;
    mapping.variant = *variant;
    try {
        mapping.origin = Graph(origin->first, std::move(edges));
    } catch (const InputError& e) {
        throw ParseError(last_line, e.what());
    }
    return mapping;
}

GadgetInstance load_gadget(const Graph& g_prime, const GadgetMapping& mapping) {
    GadgetInstance gi = build_gadget(mapping.origin, mapping.budget, mapping.variant);
    if (!(gi.g_prime == g_prime)) throw ConstructionError("gadget instance differs from the rebuilt gadget");
    for (const auto& [x, e] : mapping.u_table) {
        const std::size_t idx = gi.origin.edge_index(e);
        if (idx == gi.origin.size() || gi.u_of_edge[idx] != x)
            throw ConstructionError("U table row " + std::to_string(x) + " -> " + std::to_string(e.u) + " " +
                                    std::to_string(e.v) + " does not match the gadget");
    }
    return gi;
}

std::string instance_hash(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(emit_instance(g))));
    return buf;
}

SolutionRecord make_solution_record(const Graph& g, const SolveConfig& cfg, const VertexCutSolution& sol,
                                    std::string solver, double wall_time_ms) {
    SolutionRecord rec;
    rec.instance_hash = instance_hash(g);
    rec.objective = std::string(to_string(cfg.objective));
    rec.solver = std::move(solver);
    rec.budget = cfg.budget;
    rec.threshold = cfg.threshold;
    rec.set = sol.set;
    switch (cfg.objective) {
        case Objective::max_components: rec.value = static_cast<std::int64_t>(sol.component_count); break;
        case Objective::min_pairwise: rec.value = static_cast<std::int64_t>(sol.pairwise); break;
        case Objective::max_small_components: rec.value = static_cast<std::int64_t>(sol.small_components); break;
    }
    rec.component_count = sol.component_count;
    rec.pairwise = sol.pairwise;
    rec.optimal = sol.optimal;
    rec.wall_time_ms = wall_time_ms;
    return rec;
}

std::string to_json_line(const SolutionRecord& rec) {
    nlohmann::ordered_json j;
    j["instance_hash"] = rec.instance_hash;
    j["objective"] = rec.objective;
    j["solver"] = rec.solver;
    j["budget"] = format_weight(rec.budget);
    j["threshold"] = rec.threshold;
    j["set"] = rec.set.members();
    j["value"] = rec.value;
    j["component_count"] = rec.component_count;
    j["pairwise"] = rec.pairwise;
    j["optimal"] = rec.optimal;
    j["wall_time_ms"] = rec.wall_time_ms;
    return j.dump();
}

SolutionRecord parse_solution_record(std::string_view json_line) {
    try {
        const auto j = nlohmann::json::parse(json_line);
        SolutionRecord rec;
        rec.instance_hash = j.at("instance_hash").get<std::string>();
        rec.objective = j.at("objective").get<std::string>();
        rec.solver = j.at("solver").get<std::string>();
        rec.budget = parse_weight(j.at("budget").get<std::string>());
        rec.threshold = j.at("threshold").get<std::size_t>();
        rec.set = VertexSet(j.at("set").get<std::vector<Vertex>>());
        rec.value = j.at("value").get<std::int64_t>();
        rec.component_count = j.at("component_count").get<std::size_t>();
        rec.pairwise = j.at("pairwise").get<std::uint64_t>();
        rec.optimal = j.at("optimal").get<bool>();
        rec.wall_time_ms = j.at("wall_time_ms").get<double>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed solution record: ") + e.what());
    }
}

bool validates(const Graph& g, const SolutionRecord& rec) {
    for (Vertex v : rec.set)
        if (!g.has_vertex(v)) return false;
    if (rec.instance_hash != instance_hash(g)) return false;
    const ComponentReport rep = components_after_vertex_deletion(g, rec.set);
    const auto pairwise = pairwise_connectivity(rep);
    std::int64_t value = 0;
    if (rec.objective == to_string(Objective::max_components)) {
        value = static_cast<std::int64_t>(rep.count);
    } else if (rec.objective == to_string(Objective::min_pairwise)) {
        value = static_cast<std::int64_t>(pairwise);
    } else if (rec.objective == to_string(Objective::max_small_components)) {
        value = static_cast<std::int64_t>(count_small_components(rep, rec.threshold));
    } else {
        return false;
    }
    return value == rec.value && rep.count == rec.component_count && pairwise == rec.pairwise;
}

}  // namespace kvcut
