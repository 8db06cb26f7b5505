#include "sigmatau/serialize.hpp"

#include <fstream>

namespace sigmatau {

namespace {

// Largest magnitude emitted as a plain JSON integer; everything bigger goes
// out as a string so 64-bit and double-based readers both stay exact.
const Integer kJsonIntLimit = Integer(1) << 53;

}  // namespace

Json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    Integer n = numerator(r);
    if (abs(n) <= kJsonIntLimit) {
      return Json(static_cast<std::int64_t>(n));
    }
  }
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return Rational(Integer(j.get<std::int64_t>()));
  }
  if (j.is_number_unsigned()) {
    return Rational(Integer(j.get<std::uint64_t>()));
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw Error(Errc::BadInput, "expected an integer or \"p/q\" string, got " + j.dump());
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(Errc::BadInput, "expected a matrix (array of rows)");
  }
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return Mat(0, 0);
  if (!j[0].is_array()) {
    throw Error(Errc::BadInput, "expected a matrix (array of rows)");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<Index>(j[static_cast<size_t>(i)].size()) != cols) {
      throw Error(Errc::BadInput, "ragged matrix rows");
    }
    for (Index c = 0; c < cols; ++c) {
      m(i, c) = rational_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    }
  }
  return m;
}

Json vector_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Vec vector_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(Errc::BadInput, "expected a vector (array)");
  }
  Vec v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = rational_from_json(j[i]);
  }
  return v;
}

Json algebra_to_json(const StructAlgebra& A) {
  const Index n = A.dim();
  Json table = Json::array();
  for (Index i = 0; i < n; ++i) {
    Json ti = Json::array();
    for (Index j = 0; j < n; ++j) {
      Json tij = Json::array();
      for (Index k = 0; k < n; ++k) {
        tij.push_back(rational_to_json(A.table(i, j, k)));
      }
      ti.push_back(std::move(tij));
    }
    table.push_back(std::move(ti));
  }
  Json out;
  out["dim"] = n;
  out["unit"] = vector_to_json(A.unit());
  out["table"] = std::move(table);
  return out;
}

StructAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("table")) {
    throw Error(Errc::BadInput, "algebra needs \"dim\", \"unit\" and \"table\"");
  }
  const auto dim = j.at("dim").get<std::int64_t>();
  Vec unit = vector_from_json(j.at("unit"));
  const Json& tj = j.at("table");
  if (dim < 1 || unit.size() != dim || !tj.is_array() ||
      static_cast<std::int64_t>(tj.size()) != dim) {
    throw Error(Errc::BadInput, "algebra fields have inconsistent dimensions");
  }
  const size_t n = static_cast<size_t>(dim);
  std::vector<std::vector<std::vector<Rational>>> table(
      n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (size_t a = 0; a < n; ++a) {
    if (!tj[a].is_array() || tj[a].size() != n) {
      throw Error(Errc::BadInput, "algebra table has inconsistent dimensions");
    }
    for (size_t b = 0; b < n; ++b) {
      if (!tj[a][b].is_array() || tj[a][b].size() != n) {
        throw Error(Errc::BadInput, "algebra table has inconsistent dimensions");
      }
      for (size_t c = 0; c < n; ++c) {
        table[a][b][c] = rational_from_json(tj[a][b][c]);
      }
    }
  }
  return StructAlgebra::from_table(unit, table);
}

Json algmap_to_json(const AlgMap& m) {
  Json out;
  out["kind"] = m.kind == MapKind::EndomorphismClaimed ? "endomorphism" : "linear";
  out["matrix"] = matrix_to_json(m.matrix);
  return out;
}

AlgMap algmap_from_json(const Json& j) {
  if (j.is_array()) {  // bare matrix, claimed linear
    return AlgMap{matrix_from_json(j), MapKind::LinearOnly};
  }
  if (!j.is_object() || !j.contains("matrix")) {
    throw Error(Errc::BadInput, "map needs a \"matrix\" field");
  }
  MapKind kind = MapKind::LinearOnly;
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "endomorphism") {
      kind = MapKind::EndomorphismClaimed;
    } else if (k != "linear") {
      throw Error(Errc::BadInput, "map kind must be \"endomorphism\" or \"linear\"");
    }
  }
  return AlgMap{matrix_from_json(j.at("matrix")), kind};
}

Json derivation_values_to_json(const Mat& values) {
  Json out;
  out["values"] = matrix_to_json(values);
  return out;
}

Mat derivation_values_from_json(const Json& j) {
  if (j.is_array()) return matrix_from_json(j);
  if (!j.is_object() || !j.contains("values")) {
    throw Error(Errc::BadInput, "derivation needs a \"values\" field");
  }
  return matrix_from_json(j.at("values"));
}

Json quadint_to_json(const QuadInt& x) {
  Json out;
  auto int_field = [](const Integer& n) -> Json {
    if (abs(n) <= kJsonIntLimit) return Json(static_cast<std::int64_t>(n));
    return Json(to_string(n));
  };
  out["a"] = int_field(x.a);
  out["b"] = int_field(x.b);
  return out;
}

QuadInt quadint_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw Error(Errc::BadInput, "quadratic integer needs \"a\" and \"b\"");
  }
  auto read = [](const Json& field) -> Integer {
    Rational r = rational_from_json(field);
    if (!is_integer(r)) {
      throw Error(Errc::BadInput, "quadratic integer coordinates must be integers");
    }
    return numerator(r);
  };
  return QuadInt{read(j.at("a")), read(j.at("b"))};
}

Json quadrat_to_json(const QuadRat& z) {
  Json out;
  out["u"] = to_string(z.u);
  out["v"] = to_string(z.v);
  return out;
}

namespace {

const char* endo_name(EndoKind kind) {
  return kind == EndoKind::Identity ? "id" : "conj";
}

EndoKind endo_kind_from_name(const std::string& name) {
  if (name == "id") return EndoKind::Identity;
  if (name == "conj") return EndoKind::Conjugation;
  throw Error(Errc::BadInput, "endomorphism must be \"id\" or \"conj\"");
}

}  // namespace

Json twisted_to_json(const TwistedDerivation& D) {
  Json out;
  auto int_field = [](const Integer& n) -> Json {
    if (abs(n) <= kJsonIntLimit) return Json(static_cast<std::int64_t>(n));
    return Json(to_string(n));
  };
  out["d"] = int_field(D.ring().d());
  out["sigma"] = endo_name(D.sigma().kind);
  out["tau"] = endo_name(D.tau().kind);
  out["alpha"] = int_field(D.image_of_gen().a);
  out["beta"] = int_field(D.image_of_gen().b);
  return out;
}

TwistedDerivation twisted_from_json(const Json& j) {
  for (const char* field : {"d", "sigma", "tau", "alpha", "beta"}) {
    if (!j.is_object() || !j.contains(field)) {
      throw Error(Errc::BadInput, std::string("derivation is missing \"") + field + "\"");
    }
  }
  auto read_int = [](const Json& field) -> Integer {
    Rational r = rational_from_json(field);
    if (!is_integer(r)) {
      throw Error(Errc::BadInput, "expected an integer field");
    }
    return numerator(r);
  };
  QuadRing ring{read_int(j.at("d"))};
  QuadEndo sigma{ring, endo_kind_from_name(j.at("sigma").get<std::string>())};
  QuadEndo tau{ring, endo_kind_from_name(j.at("tau").get<std::string>())};
  return TwistedDerivation(ring, sigma, tau,
                           {read_int(j.at("alpha")), read_int(j.at("beta"))});
}

Json report_to_json(const CheckReport& report) {
  Json out = Json::array();
  for (const auto& [name, pass] : report.items) {
    Json item;
    item["name"] = name;
    item["pass"] = pass;
    out.push_back(std::move(item));
  }
  return out;
}

Json certificate_to_json(const FactorizationCertificate& cert) {
  Json out;
  out["case"] = static_cast<int>(cert.tag);
  out["algebra"] = algebra_to_json(cert.algebra);
  out["sigma"] = matrix_to_json(cert.sigma);
  out["tau"] = matrix_to_json(cert.tau);
  out["derivation"] = matrix_to_json(cert.derivation);
  Json carrier;
  carrier["ambient"] = cert.carrier.ambient_dim();
  carrier["rank"] = cert.carrier.rank();
  carrier["basis"] = matrix_to_json(cert.carrier.basis());
  out["carrier"] = std::move(carrier);
  out["delta_images"] = matrix_to_json(cert.delta_images);
  out["f_matrix"] = matrix_to_json(cert.f_matrix);
  out["checks"] = report_to_json(cert.checks);
  return out;
}

FactorizationCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) {
    throw Error(Errc::BadInput, "certificate must be a JSON object");
  }
  for (const char* field :
       {"case", "algebra", "sigma", "tau", "derivation", "carrier", "delta_images",
        "f_matrix"}) {
    if (!j.contains(field)) {
      throw Error(Errc::BadInput, std::string("certificate is missing \"") + field + "\"");
    }
  }
  const int tag = j.at("case").get<int>();
  if (tag < 1 || tag > 4) {
    throw Error(Errc::BadInput, "certificate case must be 1, 2, 3 or 4");
  }
  FactorizationCertificate cert;
  cert.tag = static_cast<UnivCase>(tag);
  cert.algebra = algebra_from_json(j.at("algebra"));
  cert.sigma = matrix_from_json(j.at("sigma"));
  cert.tau = matrix_from_json(j.at("tau"));
  cert.derivation = matrix_from_json(j.at("derivation"));
  const Json& cj = j.at("carrier");
  if (!cj.is_object() || !cj.contains("ambient") || !cj.contains("basis")) {
    throw Error(Errc::BadInput, "carrier needs \"ambient\" and \"basis\"");
  }
  Mat basis = matrix_from_json(cj.at("basis"));
  const Index ambient = static_cast<Index>(cj.at("ambient").get<std::int64_t>());
  cert.carrier = basis.rows() == 0 ? Submodule::zero(ambient) : Submodule::span_of(basis);
  if (cert.carrier.ambient_dim() != ambient) {
    throw Error(Errc::BadInput, "carrier basis does not match its ambient dimension");
  }
  cert.delta_images = matrix_from_json(j.at("delta_images"));
  cert.f_matrix = matrix_from_json(j.at("f_matrix"));
  return cert;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::BadInput, "cannot open " + path);
  }
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadInput, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::BadInput, "cannot write " + path);
  }
  out << j.dump(2) << "\n";
}

}  // namespace sigmatau
