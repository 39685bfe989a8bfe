#ifndef HECKE_JSON_IO_HPP
#define HECKE_JSON_IO_HPP

#include <json.hpp>

#include "hecke/element.hpp"
#include "hecke/representation.hpp"

namespace hecke {

// Insertion-ordered so every emitted document is byte-stable.
using Json = nlohmann::ordered_json;

/// Scalar <-> [re_num, re_den, im_num, im_den] integer 4-tuple.
Json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const Json &j);

/// HeckeElement <-> {"class-rep-cycles": 4-tuple, ...}, keys ordered by
/// double-coset class index.
Json element_to_json(const HeckeElement &f);
HeckeElement element_from_json(const PairPtr &pair, const Json &j);

Json matrix_to_json(const RepMatrix &M);

/// { "n_right", "n_left", "n_double", "double_classes": [...] }
Json cosets_report(const PairPtr &pair);

Json structure_constants_to_json(const PairPtr &pair);

} // namespace hecke

#endif
