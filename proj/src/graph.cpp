#include "ggraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ggraph {

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Power: return "power";
        case GraphKind::IntersectionPower: return "ipg";
        case GraphKind::EnhancedPower: return "epg";
        case GraphKind::Difference: return "diff";
        case GraphKind::DifferenceUndeleted: return "diff_undeleted";
    }
    return "?";
}

std::optional<GraphKind> kind_from_name(const std::string& s) {
    if (s == "power") return GraphKind::Power;
    if (s == "ipg") return GraphKind::IntersectionPower;
    if (s == "epg") return GraphKind::EnhancedPower;
    if (s == "diff") return GraphKind::Difference;
    if (s == "diff_undeleted") return GraphKind::DifferenceUndeleted;
    return std::nullopt;
}

Graph::Graph(int n) : n_(n), adj_(n), verts_(n) {}

long Graph::m() const {
    long twice = 0;
    for (int u = 0; u < n_; ++u) twice += adj_.row_popcount(u);
    return twice / 2;
}

Graph Graph::induced(std::vector<int> keep) const {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    Graph out(int(keep.size()));
    out.group_ = group_;
    out.kind_ = kind_;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.verts_[i] = verts_[keep[i]];
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) out.add_edge(int(i), int(j));
    }
    return out;
}

Graph Graph::complement() const {
    Graph out(n_);
    out.group_ = group_;
    out.kind_ = kind_.empty() ? "" : "complement_of_" + kind_;
    out.verts_ = verts_;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.add_edge(u, v);
    return out;
}

std::vector<int> Graph::isolated() const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_.row_popcount(u) == 0) out.push_back(u);
    return out;
}

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("graph construction invariant violated: " + what);
}

struct ClassRelations {
    BitMatrix power, ipg, epg;
};

ClassRelations class_relations(const CyclicLattice& L) {
    int c = L.num_classes();
    ClassRelations r{BitMatrix(c), BitMatrix(c), BitMatrix(c)};
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            if (a == b) continue;
            if (L.contains(a, b) || L.contains(b, a)) r.power.set(a, b);
            // identity class is id 0; adjacent to everything by convention
            if (a == 0 || b == 0 || L.meets_nontrivially(a, b)) r.ipg.set(a, b);
        }
    // common-ancestor pairs, marked per ancestor over its descendant list
    std::vector<std::vector<int>> desc(c);
    for (int C = 0; C < c; ++C)
        for (int a = 0; a < c; ++a)
            if (L.contains(C, a)) desc[C].push_back(a);
    for (int C = 0; C < c; ++C)
        for (std::size_t i = 0; i < desc[C].size(); ++i)
            for (std::size_t j = i + 1; j < desc[C].size(); ++j) {
                r.epg.set(desc[C][i], desc[C][j]);
                r.epg.set(desc[C][j], desc[C][i]);
            }
    // the power graph must be a spanning subgraph of the other two
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b)
            if (r.power.get(a, b)) {
                require(r.ipg.get(a, b), "power edge missing from intersection graph");
                require(r.epg.get(a, b), "power edge missing from enhanced graph");
            }
    return r;
}

BitMatrix difference_adjacency(const ClassRelations& r, int c) {
    BitMatrix d(c);
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b)
            if (r.ipg.get(a, b) && !r.power.get(a, b)) d.set(a, b);
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b)
            require(!(d.get(a, b) && r.power.get(a, b)), "difference overlaps power");
    return d;
}

}  // namespace

BitMatrix class_adjacency(const CyclicLattice& L, GraphKind kind) {
    ClassRelations r = class_relations(L);
    switch (kind) {
        case GraphKind::Power: return r.power;
        case GraphKind::IntersectionPower: return r.ipg;
        case GraphKind::EnhancedPower: return r.epg;
        case GraphKind::Difference:
        case GraphKind::DifferenceUndeleted: return difference_adjacency(r, L.num_classes());
    }
    return BitMatrix(0);
}

Graph build_class_graph(const CyclicLattice& L, GraphKind kind) {
    BitMatrix adj = class_adjacency(L, kind);
    int c = L.num_classes();
    std::vector<int> keep;
    for (int a = 0; a < c; ++a) {
        if (kind == GraphKind::Difference && adj.row_popcount(a) == 0) continue;
        keep.push_back(a);
    }
    Graph g(int(keep.size()));
    g.set_meta(L.group().name(), kind_name(kind));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const GeneratorClass& ci = L.cls(keep[i]);
        VertexInfo& v = g.vertex(int(i));
        v.label = L.group().display(ci.representative);
        v.order = ci.subgroup_order;
        v.element = ci.representative;
        v.weight = long(ci.members.size());
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adj.get(keep[i], keep[j])) g.add_edge(int(i), int(j));
    }
    return g;
}

Graph build_graph(const CyclicLattice& L, GraphKind kind, long vertex_cap) {
    BitMatrix adj = class_adjacency(L, kind);
    int c = L.num_classes();
    bool within = kind != GraphKind::Difference && kind != GraphKind::DifferenceUndeleted;

    std::vector<int> keep_elems;
    if (kind == GraphKind::Difference) {
        // a class is isolated in the difference graph exactly when it has
        // no adjacent class: same-class pairs are never difference edges
        for (int a = 0; a < c; ++a)
            if (adj.row_popcount(a) > 0)
                keep_elems.insert(keep_elems.end(), L.cls(a).members.begin(),
                                  L.cls(a).members.end());
        std::sort(keep_elems.begin(), keep_elems.end());
    } else {
        keep_elems.resize(L.group().order());
        for (std::size_t i = 0; i < keep_elems.size(); ++i) keep_elems[i] = int(i);
    }
    if (long(keep_elems.size()) > vertex_cap)
        throw PreconditionFailed("element graph on " + std::to_string(keep_elems.size()) +
                                 " vertices exceeds the cap " + std::to_string(vertex_cap));

    Graph g(int(keep_elems.size()));
    g.set_meta(L.group().name(), kind_name(kind));
    std::vector<int> pos(L.group().order(), -1);
    for (std::size_t i = 0; i < keep_elems.size(); ++i) {
        pos[keep_elems[i]] = int(i);
        VertexInfo& v = g.vertex(int(i));
        v.element = keep_elems[i];
        v.label = L.group().display(keep_elems[i]);
        v.order = L.group().element_order(keep_elems[i]);
    }
    for (int a = 0; a < c; ++a) {
        const auto& ma = L.cls(a).members;
        if (pos[ma.front()] < 0) continue;
        if (within)
            for (std::size_t i = 0; i < ma.size(); ++i)
                for (std::size_t j = i + 1; j < ma.size(); ++j)
                    g.add_edge(pos[ma[i]], pos[ma[j]]);
        for (int b = a + 1; b < c; ++b) {
            if (!adj.get(a, b)) continue;
            const auto& mb = L.cls(b).members;
            for (int x : ma)
                for (int y : mb) g.add_edge(pos[x], pos[y]);
        }
    }
    return g;
}

// --- serialization ---

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["group"] = g.group_name();
    j["kind"] = g.kind();
    j["n"] = g.n();
    j["vertices"] = nlohmann::ordered_json::array();
    for (int u = 0; u < g.n(); ++u) {
        j["vertices"].push_back({{"id", u}, {"label", g.vertex(u).label},
                                 {"order", g.vertex(u).order}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) j["edges"].push_back({u, v});
    return j.dump(2) + "\n";
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph \"" << (g.group_name().empty() ? "g" : g.group_name());
    if (!g.kind().empty()) out << " " << g.kind();
    out << "\" {\n";
    for (int u = 0; u < g.n(); ++u) {
        out << "  " << u << " [label=\"" << g.vertex(u).label;
        if (g.vertex(u).order > 0) out << " (o=" << g.vertex(u).order << ")";
        out << "\"];\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_csv(const Graph& g) {
    std::ostringstream out;
    out << "u,v\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) out << u << "," << v << "\n";
    return out.str();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw SchemaError("expected an object with an integer \"n\"");
    long n = j["n"].get<long>();
    if (n < 0 || n > 1000000) throw SchemaError("vertex count out of range");
    Graph g{int(n)};
    g.set_meta(j.value("group", std::string()), j.value("kind", std::string()));
    if (j.contains("vertices")) {
        if (!j["vertices"].is_array() || long(j["vertices"].size()) != n)
            throw SchemaError("\"vertices\" must be an array of length n");
        for (long i = 0; i < n; ++i) {
            const auto& v = j["vertices"][i];
            if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer() ||
                v["id"].get<long>() != i)
                throw SchemaError("vertex " + std::to_string(i) + " must carry id " +
                                  std::to_string(i));
            g.vertex(int(i)).label = v.value("label", "v" + std::to_string(i));
            g.vertex(int(i)).order = v.value("order", 0L);
        }
    } else {
        for (long i = 0; i < n; ++i) g.vertex(int(i)).label = "v" + std::to_string(i);
    }
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SchemaError("expected an \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw SchemaError("each edge must be a pair of vertex ids");
        long u = e[0].get<long>(), v = e[1].get<long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw SchemaError("edge endpoints out of range");
        g.add_edge(int(u), int(v));
    }
    return g;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ggraph
