// sigmatau: exact computations with (sigma,tau)-derivations on quadratic
// integer rings, polynomial rings and structure-constant algebras.
//
// All results go to stdout as a single JSON document; diagnostics go to
// stderr. Exit codes: 0 success, 1 invalid input, 2 a checked property
// failed (e.g. `verify` on a broken certificate).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "sigmatau/endos.hpp"
#include "sigmatau/polyring.hpp"
#include "sigmatau/serialize.hpp"
#include "sigmatau/twisted.hpp"
#include "sigmatau/universal.hpp"

namespace {

using namespace sigmatau;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitPropertyFailed = 2;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

QuadEndo endo_from_name(const QuadRing& ring, const std::string& name) {
  if (name == "id") return QuadEndo{ring, EndoKind::Identity};
  if (name == "conj") return QuadEndo{ring, EndoKind::Conjugation};
  throw Error(Errc::BadInput, "endomorphism must be \"id\" or \"conj\"");
}

int run_classify(std::int64_t d) {
  QuadRing ring{Integer(d)};
  auto endos = classify(ring);
  Json out;
  out["endos"] = Json::array();
  for (const QuadEndo& e : endos) {
    Json item;
    if (e.kind == EndoKind::Identity) {
      item["kind"] = "id";
    } else {
      item["kind"] = "conj";
      if (ring.branch() == Branch::Omega) {
        item["omega_image"] = "1-omega";
      } else {
        item["sqrt_image"] = "-sqrt(d)";
      }
    }
    out["endos"].push_back(std::move(item));
  }
  emit(out);
  return kExitOk;
}

// Deterministic coordinate sampling; plain modulo keeps the stream
// identical across standard libraries.
Integer sample_coord(std::mt19937_64& rng, std::int64_t box) {
  const std::uint64_t span = static_cast<std::uint64_t>(2 * box + 1);
  return Integer(static_cast<std::int64_t>(rng() % span) - box);
}

int run_leibniz_check(std::int64_t d, const std::string& sigma_name,
                      const std::string& tau_name, std::int64_t alpha,
                      std::int64_t beta, std::uint64_t samples, std::uint64_t seed) {
  QuadRing ring{Integer(d)};
  QuadEndo sigma = endo_from_name(ring, sigma_name);
  QuadEndo tau = endo_from_name(ring, tau_name);
  QuadInt image{Integer(alpha), Integer(beta)};

  constexpr std::int64_t kBox = 1000;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    QuadInt x{sample_coord(rng, kBox), sample_coord(rng, kBox)};
    QuadInt y{sample_coord(rng, kBox), sample_coord(rng, kBox)};
    if (!leibniz_holds(ring, sigma, tau, image, x, y)) {
      Json out;
      out["holds"] = false;
      out["samples"] = i + 1;
      out["seed"] = seed;
      Json cx;
      cx["x"] = quadint_to_json(x);
      cx["y"] = quadint_to_json(y);
      out["counterexample"] = std::move(cx);
      emit(out);
      return kExitPropertyFailed;
    }
  }
  Json out;
  out["holds"] = true;
  out["samples"] = samples;
  out["seed"] = seed;
  emit(out);
  return kExitOk;
}

int run_inner(std::int64_t d, const std::string& sigma_name, const std::string& tau_name,
              std::int64_t alpha, std::int64_t beta) {
  QuadRing ring{Integer(d)};
  QuadEndo sigma = endo_from_name(ring, sigma_name);
  QuadEndo tau = endo_from_name(ring, tau_name);
  TwistedDerivation D(ring, sigma, tau, QuadInt{Integer(alpha), Integer(beta)});
  InnerDecision decision = inner_witness(D);
  Json out;
  if (decision.witness) {
    out["inner"] = true;
    out["witness"] = quadint_to_json(*decision.witness);
  } else {
    out["inner"] = false;
    out["candidate"] = quadrat_to_json(decision.candidate);
  }
  emit(out);
  return kExitOk;
}

int run_ufd_delta(const std::string& sigma_image, const std::string& tau_image,
                  const std::string& apply_to) {
  PolyEndo sigma{parse_poly(sigma_image)};
  PolyEndo tau{parse_poly(tau_image)};
  Poly f = parse_poly(apply_to);
  DeltaGenerator delta(sigma, tau);
  Json out;
  out["g"] = to_string(delta.g());
  out["result"] = to_string(delta.apply(f));
  emit(out);
  return kExitOk;
}

int run_universal(int tag, const std::string& algebra_path, const std::string& sigma_path,
                  const std::string& tau_path, const std::string& derivation_path,
                  const std::string& out_path) {
  if (tag < 1 || tag > 4) {
    throw Error(Errc::BadInput, "--case must be 1, 2, 3 or 4");
  }
  StructAlgebra A = algebra_from_json(load_json_file(algebra_path));
  AlgMap sigma = algmap_from_json(load_json_file(sigma_path));
  AlgMap tau = algmap_from_json(load_json_file(tau_path));
  Mat values = derivation_values_from_json(load_json_file(derivation_path));
  GeneralDerivation D(A, sigma.matrix, tau.matrix, values);
  FactorizationCertificate cert = build_case(static_cast<UnivCase>(tag), D);
  Json j = certificate_to_json(cert);
  if (!out_path.empty()) {
    save_json_file(out_path, j);
  }
  emit(j);
  return kExitOk;
}

int run_verify(const std::string& cert_path) {
  FactorizationCertificate cert = certificate_from_json(load_json_file(cert_path));
  CheckReport report = verify_certificate(cert);
  Json out;
  out["valid"] = report.all_pass();
  out["checks"] = report_to_json(report);
  emit(out);
  return report.all_pass() ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact (sigma,tau)-derivation toolkit"};
  app.require_subcommand(1);

  std::int64_t d = 0;
  std::string sigma_name = "id", tau_name = "conj";
  std::int64_t alpha = 0, beta = 0;
  std::uint64_t samples = 100, seed = 0;
  std::string sigma_image, tau_image, apply_to;
  int case_tag = 1;
  std::string algebra_path, sigma_path, tau_path, derivation_path, out_path, cert_path;

  auto* classify_cmd = app.add_subcommand("classify", "list the ring endomorphisms of O_K");
  classify_cmd->add_option("--d", d, "squarefree integer")->required();

  auto* leibniz_cmd =
      app.add_subcommand("leibniz-check", "sample the twisted Leibniz law exactly");
  leibniz_cmd->add_option("--d", d)->required();
  leibniz_cmd->add_option("--sigma", sigma_name, "id|conj")->required();
  leibniz_cmd->add_option("--tau", tau_name, "id|conj")->required();
  leibniz_cmd->add_option("--alpha", alpha)->required();
  leibniz_cmd->add_option("--beta", beta)->required();
  leibniz_cmd->add_option("--samples", samples, "number of sampled pairs");
  leibniz_cmd->add_option("--seed", seed, "PRNG seed");

  auto* inner_cmd = app.add_subcommand("inner", "decide whether D is inner, with witness");
  inner_cmd->add_option("--d", d)->required();
  inner_cmd->add_option("--sigma", sigma_name, "id|conj")->required();
  inner_cmd->add_option("--tau", tau_name, "id|conj")->required();
  inner_cmd->add_option("--alpha", alpha)->required();
  inner_cmd->add_option("--beta", beta)->required();

  auto* ufd_cmd = app.add_subcommand("ufd-delta", "apply the generator (tau-sigma)/g");
  ufd_cmd->add_option("--sigma-image", sigma_image, "sigma(x) as a polynomial")->required();
  ufd_cmd->add_option("--tau-image", tau_image, "tau(x) as a polynomial")->required();
  ufd_cmd->add_option("--apply", apply_to, "polynomial to apply the generator to")->required();

  auto* universal_cmd =
      app.add_subcommand("universal", "build a universal factorization certificate");
  universal_cmd->add_option("--case", case_tag, "1|2|3|4")->required();
  universal_cmd->add_option("--algebra", algebra_path)->required();
  universal_cmd->add_option("--sigma", sigma_path)->required();
  universal_cmd->add_option("--tau", tau_path)->required();
  universal_cmd->add_option("--derivation", derivation_path)->required();
  universal_cmd->add_option("--out", out_path, "also write the certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate from raw data");
  verify_cmd->add_option("--cert", cert_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    Json err;
    err["code"] = "BadInput";
    err["message"] = e.what();
    emit(err);
    return kExitBadInput;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(d);
    if (leibniz_cmd->parsed()) {
      return run_leibniz_check(d, sigma_name, tau_name, alpha, beta, samples, seed);
    }
    if (inner_cmd->parsed()) return run_inner(d, sigma_name, tau_name, alpha, beta);
    if (ufd_cmd->parsed()) return run_ufd_delta(sigma_image, tau_image, apply_to);
    if (universal_cmd->parsed()) {
      return run_universal(case_tag, algebra_path, sigma_path, tau_path, derivation_path,
                           out_path);
    }
    if (verify_cmd->parsed()) return run_verify(cert_path);
  } catch (const Error& e) {
    Json err;
    err["code"] = e.code_name();
    err["message"] = e.what();
    emit(err);
    return kExitBadInput;
  } catch (const std::exception& e) {
    Json err;
    err["code"] = "Internal";
    err["message"] = e.what();
    emit(err);
    return kExitBadInput;
  }
  return kExitBadInput;
}
