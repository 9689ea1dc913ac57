#include "gabor/certify.hpp"

#include <future>
#include <utility>

#include "gabor/errors.hpp"

namespace gabor::ival {
namespace {

// Enclosure of a quantity that must be strictly positive for the claim to hold.
Interval signed_enclosure(const Expr& e, Claim c, const Interval& x) {
  switch (c) {
    case Claim::Positive: return enclose(e, x);
    case Claim::Negative: return -enclose(e, x);
    case Claim::Increasing: return eval_jet(e, x).slope;
    case Claim::Decreasing: return -eval_jet(e, x).slope;
  }
  throw std::logic_error("unhandled claim");
}

struct Box {
  Interval x;
  int depth;
};

CertificateResult run(const Certificate& c) {
  CertificateResult r{c, Status::Proved, 0, std::nullopt};
  std::vector<Box> stack{{c.domain, 0}};
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    std::optional<Interval> enc;
    try {
      enc = signed_enclosure(c.expr, c.claim, b.x);
    } catch (const DomainViolation&) {
    }
    if (enc && enc->positive()) {
      ++r.leaves_checked;
      continue;
    }
    std::optional<Interval> at_mid;
    try {
      at_mid = signed_enclosure(c.expr, c.claim, Interval(b.x.mid()));
    } catch (const DomainViolation&) {
    }
    if ((enc && enc->negative()) || (at_mid && at_mid->negative())) {
      ++r.leaves_checked;
      r.status = Status::Failed;
      r.witness = b.x;
      return r;
    }
    double m = b.x.mid();
    if (b.depth >= c.max_depth || !(b.x.lo() < m && m < b.x.hi())) {
      ++r.leaves_checked;
      r.status = merge(r.status, Status::DepthExceeded);
      if (!r.witness) r.witness = b.x;
      continue;
    }
    stack.push_back({Interval(m, b.x.hi()), b.depth + 1});
    stack.push_back({Interval(b.x.lo(), m), b.depth + 1});
  }
  if (r.status == Status::Proved) r.witness.reset();
  return r;
}

}  // namespace

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::Positive: return "positive";
    case Claim::Negative: return "negative";
    case Claim::Increasing: return "increasing";
    case Claim::Decreasing: return "decreasing";
  }
  return "unknown";
}

Claim parse_claim(std::string_view s) {
  for (Claim c : {Claim::Positive, Claim::Negative, Claim::Increasing, Claim::Decreasing})
    if (claim_name(c) == s) return c;
  throw DomainError("unknown claim '" + std::string(s) + "'");
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Failed: return "failed";
    case Status::DepthExceeded: return "depth_exceeded";
  }
  return "unknown";
}

Status parse_status(std::string_view s) {
  for (Status st : {Status::Proved, Status::Failed, Status::DepthExceeded})
    if (status_name(st) == s) return st;
  throw DomainError("unknown status '" + std::string(s) + "'");
}

Status merge(Status a, Status b) {
  if (a == Status::Failed || b == Status::Failed) return Status::Failed;
  if (a == Status::DepthExceeded || b == Status::DepthExceeded) return Status::DepthExceeded;
  return Status::Proved;
}

CertificateResult prove_positive(const Expr& expr, const Interval& domain, int max_depth) {
  return check(Certificate{"", expr, domain, Claim::Positive, max_depth, ""});
}

CertificateResult check(const Certificate& c) {
  if (c.max_depth < 0) throw DomainError("max_depth must be nonnegative");
  return run(c);
}

std::vector<CertificateResult> check_all(const std::vector<Certificate>& cs) {
  std::vector<std::future<CertificateResult>> jobs;
  jobs.reserve(cs.size());
  for (const auto& c : cs) jobs.push_back(std::async(std::launch::async, [&c] { return check(c); }));
  std::vector<CertificateResult> out;
  out.reserve(cs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Certificate negative_sanity_certificate() {
  return {"sanity_negative_constant", Expr(-1.0), Interval(0.0, 1.0), Claim::Positive, default_max_depth,
          "must fail: the constant -1 is not positive"};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j{{"name", c.name},
                   {"expression", c.expr.to_prefix()},
                   {"domain", {c.domain.lo(), c.domain.hi()}},
                   {"claim", claim_name(c.claim)},
                   {"max_depth", c.max_depth}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json to_json(const CertificateResult& r) {
  nlohmann::json j = to_json(r.certificate);
  j["status"] = status_name(r.status);
  j["leaves_checked"] = r.leaves_checked;
  if (r.witness) j["witness"] = {r.witness->lo(), r.witness->hi()};
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.name = j.at("name").get<std::string>();
    c.expr = Expr::parse(j.at("expression").get<std::string>());
    const auto& d = j.at("domain");
    if (!d.is_array() || d.size() != 2) throw DomainError("domain must be a [lo, hi] pair");
    c.domain = Interval(d[0].get<double>(), d[1].get<double>());
    c.claim = parse_claim(j.at("claim").get<std::string>());
    c.max_depth = j.value("max_depth", default_max_depth);
    c.note = j.value("note", std::string());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace gabor::ival
