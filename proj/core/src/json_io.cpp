#include "magsq/json_io.hpp"

#include "magsq/errors.hpp"

namespace magsq {
namespace {

double number_from(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number in ") + what);
  return j.get<double>();
}

// Folds -0.0 into 0.0 so emitted JSON has one spelling of zero.
double clean(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(clean(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("vector must be a JSON array");
  Vec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(number_from(x, "vector"));
  return v;
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(clean(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be an array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InvalidInput("matrix must be an array of rows");
  const std::size_t cols = j[0].size();
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw InvalidInput("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = number_from(j[i][k], "matrix");
  }
  return m;
}

Json to_json(const Quaternion& q) {
  return Json::array({clean(q.a), clean(q.b), clean(q.c), clean(q.d)});
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw InvalidInput("quaternion must be an array [a, b, c, d]");
  return {number_from(j[0], "quaternion"), number_from(j[1], "quaternion"),
          number_from(j[2], "quaternion"), number_from(j[3], "quaternion")};
}

Json to_json(const Mat2C& m) {
  Json rows = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j)
      row.push_back(Json::array({clean(m(i, j).real()), clean(m(i, j).imag())}));
    rows.push_back(row);
  }
  return rows;
}

Mat2C mat2c_from_json(const Json& j) {
  const char* kShape = "2x2 complex matrix must be [[[re,im],[re,im]],[[re,im],[re,im]]]";
  if (!j.is_array() || j.size() != 2) throw InvalidInput(kShape);
  Mat2C m;
  for (int i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) throw InvalidInput(kShape);
    for (int k = 0; k < 2; ++k) {
      const auto& cell = j[i][k];
      if (!cell.is_array() || cell.size() != 2) throw InvalidInput(kShape);
      m(i, k) = Complex(number_from(cell[0], "matrix"), number_from(cell[1], "matrix"));
    }
  }
  return m;
}

Json to_json(const QuadraticForm& f) {
  return Json{{"p", f.positive_count()}, {"q", f.negative_count()}};
}

QuadraticForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    throw InvalidInput("form must be an object with integer p and q");
  if (!j["p"].is_number_integer() || !j["q"].is_number_integer())
    throw InvalidInput("form must be an object with integer p and q");
  return QuadraticForm(j["p"].get<int>(), j["q"].get<int>());
}

Json to_json(const Multivector& x) {
  Json terms = Json::array();
  for (const auto& [mask, coeff] : x.terms())  // std::map: masks ascending
    terms.push_back(Json::array({mask, clean(coeff)}));
  return Json{{"p", x.form().positive_count()},
              {"q", x.form().negative_count()},
              {"terms", terms}};
}

namespace {

Multivector terms_into(const QuadraticForm& form, const Json& terms) {
  if (!terms.is_array()) throw InvalidInput("multivector terms must be an array");
  Multivector x(form);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw InvalidInput("each term must be [mask, coeff]");
    const auto mask = t[0].get<std::int64_t>();
    if (mask < 0 || mask >= (std::int64_t{1} << form.dimension()))
      throw InvalidInput("term mask out of range for the form dimension");
    x = x + Multivector::blade(form, static_cast<std::uint32_t>(mask),
                               number_from(t[1], "term coefficient"));
  }
  return x;
}

}  // namespace

Multivector multivector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw InvalidInput("multivector must be an object with a terms array");
  return terms_into(form_from_json(j), j["terms"]);
}

Multivector multivector_from_json(const Json& j, const QuadraticForm& fallback) {
  if (!j.is_object() || !j.contains("terms"))
    throw InvalidInput("multivector must be an object with a terms array");
  if (j.contains("p") || j.contains("q")) {
    const QuadraticForm inline_form = form_from_json(j);
    if (!(inline_form == fallback))
      throw InvalidInput("multivector signature disagrees with the supplied form");
  }
  return terms_into(fallback, j["terms"]);
}

Json to_json(const RootSystemReport& r) {
  Json out{{"ok", r.ok}};
  if (!r.ok) {
    out["failed_axiom"] = r.failed_axiom;
    out["witness"] = r.witness;
  }
  return out;
}

Json to_json(const WittReport& r) {
  return Json{{"ok", r.ok},
              {"element_count", r.element_count},
              {"root_system", to_json(r.roots)}};
}

Json to_json(const MagicSquareReport& r) {
  return Json{
      {"ok", r.ok},
      {"group", r.group_name},
      {"orders",
       {{"reflection_group", r.order_reflection_group},
        {"rotation_subgroup", r.order_rotation_subgroup},
        {"lift", r.order_lift},
        {"lift_special", r.order_lift_special}}},
      {"checks",
       {{"double_cover", r.double_cover_ok},
        {"rotation_index_two", r.rotation_index_two},
        {"lift_special_index_two", r.lift_special_index_two},
        {"kernel_size", r.kernel_size},
        {"kernel_ok", r.kernel_ok},
        {"lift_reflection_generated", r.lift_reflection_generated},
        {"lift_contains_minus_identity", r.lift_contains_minus_identity},
        {"image_matches_rotation_subgroup", r.image_matches_rotation_subgroup}}}};
}

Json to_json(const CaseStudyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"claim", row.claim}, {"pass", row.pass}};
    if (!row.detail.empty()) jr["detail"] = row.detail;
    rows.push_back(jr);
  }
  return Json{{"ok", r.ok}, {"p", r.p}, {"q", r.q}, {"rows", rows}};
}

Json to_json(const DimensionReport& r) {
  return Json{{"ok", r.ok},
              {"p", r.p},
              {"q", r.q},
              {"blade_count", r.blade_count},
              {"even_count", r.even_count},
              {"products_stay_in_basis", r.products_stay_in_basis},
              {"center_is_scalar_line", r.center_is_scalar_line}};
}

Json to_json(const GroupIsoType& t) {
  Json out{{"name", t.name()}};
  if (t.tag == GroupIsoType::Tag::Cyclic || t.tag == GroupIsoType::Tag::Dihedral)
    out["n"] = t.n;
  return out;
}

}  // namespace magsq
