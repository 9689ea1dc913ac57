#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gabor/expr.hpp"
#include "gabor/interval.hpp"

namespace gabor::ival {

enum class Claim { Positive, Negative, Increasing, Decreasing };
enum class Status { Proved, Failed, DepthExceeded };

std::string_view claim_name(Claim c);
Claim parse_claim(std::string_view s);
std::string_view status_name(Status s);
Status parse_status(std::string_view s);

// Failed dominates DepthExceeded, which dominates Proved.
Status merge(Status a, Status b);

inline constexpr int default_max_depth = 40;

struct Certificate {
  std::string name;
  Expr expr = Expr(0.0);
  Interval domain;
  Claim claim = Claim::Positive;
  int max_depth = default_max_depth;
  std::string note;  // what the finite domain leaves to analytic argument
};

struct CertificateResult {
  Certificate certificate;
  Status status = Status::Proved;
  std::size_t leaves_checked = 0;
  std::optional<Interval> witness;
};

CertificateResult prove_positive(const Expr& expr, const Interval& domain, int max_depth = default_max_depth);
CertificateResult check(const Certificate& c);
// Runs certificates concurrently; results keep the input order.
std::vector<CertificateResult> check_all(const std::vector<Certificate>& cs);

std::vector<Certificate> builtin_certificates();
Certificate negative_sanity_certificate();

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const CertificateResult& r);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace gabor::ival
