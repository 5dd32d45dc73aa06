#pragma once
#include <functional>
#include <string>
#include <vector>

#include "egor/numeric.hpp"

namespace egor {

struct ParamSpec {
  std::string name;
  std::string domain;  // human-readable constraint
};

struct Identity {
  std::string id;
  std::string title;
  std::vector<ParamSpec> params;
  std::function<Rat(const ParamBinding&)> lhs;
  std::function<Rat(const ParamBinding&)> rhs;
  // bindings rejected here are skipped by grid sweeps and rejected by verify_one
  std::function<bool(const ParamBinding&)> admissible;
  std::string anchor;  // verbatim quoted formula fragment
  bool expected_failure = false;
};

struct VerificationReport {
  std::string id;
  ParamBinding binding;
  Rat lhs, rhs;
  bool equal = false;
  double elapsed_ms = 0;
};

struct Range {
  std::string name;
  long lo = 0, hi = -1;  // inclusive
};

struct Certificate {
  std::string identity;
  std::vector<Range> swept;
  ParamBinding fixed;
  long cases = 0;
  std::vector<VerificationReport> failures;
  bool pass = true;
  bool expected_failure = false;
  std::string engine;
  std::string digest;
};

extern const char* const kEngineVersion;

const std::vector<Identity>& registry_list();
const Identity* find_identity(const std::string& id);  // nullptr when unknown

VerificationReport verify_one(const std::string& id, const ParamBinding& binding);
Certificate verify_grid(const std::string& id, const std::vector<Range>& ranges, const ParamBinding& fixed = {},
                        int jobs = 1);
// expected-failure entries are satisfied when at least one case fails
bool expectation_met(const Certificate& c);

// Generating-function checks: "gf.sr", "gf.l8", "gf.a6", "gf.a14".
// trunc is the per-variable coefficient cap (exponents 0..trunc-1 compared).
Certificate gf_coeff_check(const std::string& id, long trunc, const ParamBinding& params = {});
std::vector<std::string> gf_check_ids();

// canonical JSON (sorted keys, compact) with the digest filled in
std::string certificate_json(const Certificate& c);
std::string compute_digest(const Certificate& c);
std::string certificate_csv(const Certificate& c);
std::string certificate_md(const Certificate& c);

// Structure of the t-series res_w w^{-a-1}(e^{-w} - t e^{w})^{-g-1}: after normalisation it should be
// 1 + sum_{k<=a/2} h_k ((1-t)/(1+t))^{2k}. Returns the number of inconsistent equations
// (0 when the structure holds) and fills h.
long kk14_structure_residual(long alpha, const Rat& gamma, long tdeg, std::vector<Rat>* h = nullptr);

}  // namespace egor
