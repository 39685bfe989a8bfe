#include "hecke/json_io.hpp"

#include <cstdint>
#include <limits>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::int64_t to_int64(const BigInt &v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw Error("rational component too large for JSON serialization");
  return v.convert_to<std::int64_t>();
}

} // namespace

Json scalar_to_json(const Scalar &s) {
  return Json::array({to_int64(numerator(s.re)), to_int64(denominator(s.re)),
                      to_int64(numerator(s.im)), to_int64(denominator(s.im))});
}

Scalar scalar_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 4)
    throw SemanticError("scalar must be a [re_num, re_den, im_num, im_den] array");
  for (const auto &v : j)
    if (!v.is_number_integer())
      throw SemanticError("scalar components must be integers");
  std::int64_t rn = j[0], rd = j[1], in = j[2], id = j[3];
  if (rd == 0 || id == 0)
    throw SemanticError("scalar denominator must be nonzero");
  return Scalar(Rational(rn, rd), Rational(in, id));
}

Json element_to_json(const HeckeElement &f) {
  const DoubleCosetSpace &dc = f.pair()->classes();
  const FiniteGroup &G = f.pair()->group();
  Json out = Json::object();
  for (const auto &[cls, c] : f.coeffs())
    out[format_cycles(G.element(dc.rep(cls)))] = scalar_to_json(c);
  return out;
}

HeckeElement element_from_json(const PairPtr &pair, const Json &j) {
  if (!j.is_object())
    throw SemanticError("element must be a JSON object keyed by cycle strings");
  const FiniteGroup &G = pair->group();
  const DoubleCosetSpace &dc = pair->classes();
  std::map<int, Scalar> coeffs;
  for (const auto &[key, value] : j.items()) {
    Permutation p = parse_cycles(key, G.degree());
    int id = G.id_of(p);
    if (id < 0)
      throw SemanticError("permutation " + key + " is not in the group");
    coeffs[dc.class_of(id)] += scalar_from_json(value);
  }
  return HeckeElement(pair, std::move(coeffs));
}

Json matrix_to_json(const RepMatrix &M) {
  Json rows = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c)
      row.push_back(scalar_to_json(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json cosets_report(const PairPtr &pair) {
  const DoubleCosetSpace &dc = pair->classes();
  const FiniteGroup &G = pair->group();
  Json classes = Json::array();
  for (int cls = 0; cls < dc.count(); ++cls) {
    classes.push_back(Json{{"rep", format_cycles(G.element(dc.rep(cls)))},
                           {"size", dc.size(cls)},
                           {"left_count", dc.left_count(cls)},
                           {"right_count", dc.right_count(cls)}});
  }
  return Json{{"n_right", pair->right().count()},
              {"n_left", pair->left().count()},
              {"n_double", dc.count()},
              {"double_classes", std::move(classes)}};
}

Json structure_constants_to_json(const PairPtr &pair) {
  auto c = structure_constants(pair);
  Json out = Json::array();
  for (const auto &plane : c) {
    Json jp = Json::array();
    for (const auto &row : plane) {
      Json jr = Json::array();
      for (const auto &s : row) {
        // Structure constants are coset counts; emit bare integers.
        if (s.im != 0 || denominator(s.re) != 1)
          throw Error("structure constant is not an integer");
        jr.push_back(to_int64(numerator(s.re)));
      }
      jp.push_back(std::move(jr));
    }
    out.push_back(std::move(jp));
  }
  return out;
}

} // namespace hecke
