#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magsq/casestudies.hpp"
#include "magsq/clifford.hpp"
#include "magsq/finitegrp.hpp"
#include "magsq/linalg.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/quatmat.hpp"

// Wire formats:
//   vector       [x1, ..., xn]
//   real matrix  [[row], [row], ...]            (row-major)
//   quaternion   [a, b, c, d]
//    2x2 complex  [[[re,im],[re,im]],[[re,im],[re,im]]]
//   form         {"p": int, "q": int}
//   multivector  {"p": int, "q": int, "terms": [[mask, coeff], ...]}
//                with masks ascending; "p"/"q" may be omitted on input
//                when a form is supplied out of band.
namespace magsq {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

Json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json to_json(const Mat2C& m);
Mat2C mat2c_from_json(const Json& j);

Json to_json(const QuadraticForm& f);
QuadraticForm form_from_json(const Json& j);

Json to_json(const Multivector& x);
Multivector multivector_from_json(const Json& j);
Multivector multivector_from_json(const Json& j, const QuadraticForm& fallback);

Json to_json(const RootSystemReport& r);
Json to_json(const WittReport& r);
Json to_json(const MagicSquareReport& r);
Json to_json(const CaseStudyReport& r);
Json to_json(const DimensionReport& r);
Json to_json(const GroupIsoType& t);

// Uniform error mapping for malformed documents.
Json parse_json(const std::string& text);

}  // namespace magsq
