#ifndef DIAMETERLAB_JSON_IO_HPP
#define DIAMETERLAB_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "diameterlab/clm.hpp"
#include "diameterlab/decompose.hpp"
#include "diameterlab/nonrevisiting.hpp"
#include "diameterlab/types.hpp"

namespace dlab {

using nlohmann::json;

// {"schema":1,"type":"complex","n":..,"d":..,"facets":[[v..]..]}
json to_json(const PureComplex& c);
// {"schema":1,"type":"multicomplex","n":..,"d":..,"facets":[[e..]..]}
json to_json(const PureMulticomplex& c);
// base object plus "layers": per-layer facet index lists and "layer_min".
json to_json(const LayeredMulticomplex& m);
json to_json(const std::vector<Facet>& path);
json to_json(const SheddingTree& tree);
json to_json(const SegmentTrace& trace);
json to_json(const SegmentCertificate& cert);

// Strict loaders: sortedness is normalized, duplicates and range errors are
// rejected with InputError.
PureComplex complex_from_json(const json& j);
PureMulticomplex multicomplex_from_json(const json& j);
LayeredMulticomplex layered_from_json(const json& j);
std::vector<Facet> path_from_json(const json& j);

// Either a complex or a multicomplex, keyed on "type" (default "complex").
bool json_is_multicomplex(const json& j);

std::string dot_dual_graph(const PureComplex& c);
std::string dot_dual_graph(const PureMulticomplex& c);
std::string dot_layered(const LayeredMulticomplex& m);
std::string dot_johnson(int n, int d);

}  // namespace dlab

#endif
