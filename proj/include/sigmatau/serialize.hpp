#pragma once

// JSON representations of the file formats the CLI exchanges: algebras,
// linear maps, derivations, quadratic-ring elements and factorization
// certificates. Rationals are emitted as plain JSON integers when they are
// integral and small enough to survive any 64-bit reader, and as "p/q"
// strings otherwise; both forms (and big-integer strings) are accepted on
// input, so round trips are value-exact.

#include <nlohmann/json.hpp>

#include "sigmatau/quadring.hpp"
#include "sigmatau/universal.hpp"

namespace sigmatau {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const Mat& m);  // list of rows
Mat matrix_from_json(const Json& j);

Json vector_to_json(const Vec& v);
Vec vector_from_json(const Json& j);

/// {"dim": n, "unit": [...], "table": [[[...]]]} with table[i][j][k] the
/// coefficient of e_k in e_i * e_j.
Json algebra_to_json(const StructAlgebra& A);
StructAlgebra algebra_from_json(const Json& j);

/// {"kind": "endomorphism"|"linear", "matrix": [[...]]}
Json algmap_to_json(const AlgMap& m);
AlgMap algmap_from_json(const Json& j);

/// {"values": [[...]]} with column i of the matrix = D(e_i).
Json derivation_values_to_json(const Mat& values);
Mat derivation_values_from_json(const Json& j);

/// {"a": ..., "b": ...} in the integral basis {1, gen}.
Json quadint_to_json(const QuadInt& x);
QuadInt quadint_from_json(const Json& j);

/// {"d": ..., "sigma": "id"|"conj", "tau": "id"|"conj", "alpha": ..., "beta": ...}
Json twisted_to_json(const TwistedDerivation& D);
TwistedDerivation twisted_from_json(const Json& j);

/// {"u": "p/q", "v": "p/q"} over the sqrt(d) basis, always strings.
Json quadrat_to_json(const QuadRat& z);

Json certificate_to_json(const FactorizationCertificate& cert);
FactorizationCertificate certificate_from_json(const Json& j);

Json report_to_json(const CheckReport& report);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace sigmatau
