#include "diameterlab/json_io.hpp"

#include <sstream>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"

namespace dlab {

json to_json(const PureComplex& c) {
    json j;
    j["schema"] = 1;
    j["type"] = "complex";
    j["n"] = c.n;
    j["d"] = c.d;
    j["facets"] = c.facets;
    return j;
}

json to_json(const PureMulticomplex& c) {
    json j;
    j["schema"] = 1;
    j["type"] = "multicomplex";
    j["n"] = c.n;
    j["d"] = c.d;
    j["facets"] = c.facets;
    return j;
}

json to_json(const LayeredMulticomplex& m) {
    json j = to_json(m.base);
    j["type"] = "layered_multicomplex";
    j["layer_min"] = m.layer_min;
    j["layers"] = m.layers();
    return j;
}

json to_json(const std::vector<Facet>& path) {
    json j;
    j["schema"] = 1;
    j["type"] = "facet_path";
    j["facets"] = path;
    return j;
}

json to_json(const SheddingTree& tree) {
    json j;
    if (tree.leaf) {
        j["leaf"] = true;
        return j;
    }
    j["shedding_face"] = tree.shedding_face;
    if (tree.deletion) j["deletion"] = to_json(*tree.deletion);
    if (tree.link) j["link"] = to_json(*tree.link);
    return j;
}

json to_json(const SegmentTrace& trace) {
    json j;
    j["case"] = trace.case_tag;
    j["anchor"] = trace.anchor;
    if (trace.case_tag == 2) {
        j["pivot_index"] = trace.pivot_index;
        j["pivot_vertex"] = trace.pivot_vertex;
        if (trace.head) j["head"] = to_json(*trace.head);
        if (trace.tail) j["tail"] = to_json(*trace.tail);
    }
    return j;
}

json to_json(const SegmentCertificate& cert) {
    json j;
    j["schema"] = 1;
    j["type"] = "segment_certificate";
    j["path"] = cert.path;
    j["target"] = cert.target;
    j["anchor"] = cert.anchor;
    if (cert.trace) j["trace"] = to_json(*cert.trace);
    return j;
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError("json: " + msg);
}

}  // namespace

bool json_is_multicomplex(const json& j) {
    if (!j.contains("type")) return false;
    std::string t = j["type"].get<std::string>();
    return t == "multicomplex" || t == "layered_multicomplex";
}

PureComplex complex_from_json(const json& j) {
    require(j.contains("n") && j.contains("d") && j.contains("facets"),
            "complex needs n, d, facets");
    int n = j["n"].get<int>();
    int d = j["d"].get<int>();
    auto facets = j["facets"].get<std::vector<Facet>>();
    return PureComplex(n, d, std::move(facets));  // normalizes and validates
}

PureMulticomplex multicomplex_from_json(const json& j) {
    require(j.contains("n") && j.contains("d") && j.contains("facets"),
            "multicomplex needs n, d, facets");
    int n = j["n"].get<int>();
    int d = j["d"].get<int>();
    auto facets = j["facets"].get<std::vector<Multiset>>();
    return PureMulticomplex(n, d, std::move(facets));
}

LayeredMulticomplex layered_from_json(const json& j) {
    auto base = multicomplex_from_json(j);
    require(j.contains("layers"), "layered multicomplex needs layers");
    auto layer_lists = j["layers"].get<std::vector<std::vector<int>>>();
    int layer_min = j.value("layer_min", 0);
    std::vector<int> layer_of(base.size(), -1);
    for (std::size_t l = 0; l < layer_lists.size(); ++l)
        for (int idx : layer_lists[l]) {
            require(idx >= 0 && idx < static_cast<int>(base.size()), "layer index out of range");
            require(layer_of[idx] < 0, "facet assigned to two layers");
            layer_of[idx] = layer_min + static_cast<int>(l);
        }
    for (int l : layer_of) require(l >= layer_min, "facet missing a layer");
    return make_layered(std::move(base), std::move(layer_of));
}

std::vector<Facet> path_from_json(const json& j) {
    require(j.contains("facets"), "path needs facets");
    return j["facets"].get<std::vector<Facet>>();
}

namespace {

template <typename Complex, typename Label>
std::string dot_graph(const Complex& c, Label label, const std::vector<int>* layers) {
    DualGraph g = dual_graph(c);
    std::ostringstream os;
    os << "graph dual {\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        os << "  f" << i << " [label=\"" << label(c.facets[i]);
        if (layers) os << "\\nL" << (*layers)[i];
        os << "\"];\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (int w : g.adj[i])
            if (static_cast<int>(i) < w) os << "  f" << i << " -- f" << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace

std::string dot_dual_graph(const PureComplex& c) {
    return dot_graph(c, [](const Facet& f) { return facet_to_string(f); }, nullptr);
}

std::string dot_dual_graph(const PureMulticomplex& c) {
    return dot_graph(c, [](const Multiset& m) { return multiset_to_string(m); }, nullptr);
}

std::string dot_layered(const LayeredMulticomplex& m) {
    return dot_graph(m.base, [](const Multiset& ms) { return multiset_to_string(ms); },
                     &m.layer_of);
}

std::string dot_johnson(int n, int d) { return dot_dual_graph(complete_complex(n, d)); }

}  // namespace dlab
