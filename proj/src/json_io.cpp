#include "indroots/json_io.hpp"

namespace indroots {

using nlohmann::json;

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error("polynomial JSON must be an array of integer strings");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw Error("polynomial JSON must be an array of integer strings");
    coeffs.emplace_back(item.get<std::string>(), 10);
  }
  return IntPoly(std::move(coeffs));
}

std::string rat_to_string(const BigRat& q) { return q.get_str(); }

json gauss_to_json(const GaussRat& z) {
  return json::array({rat_to_string(z.re), rat_to_string(z.im)});
}

json neg_roots_to_json(const NegRootIsolation& iso) {
  json exact = json::array();
  for (const auto& r : iso.exact_rational_roots) exact.push_back(rat_to_string(r));
  json intervals = json::array();
  for (const auto& [lo, hi] : iso.irrational_intervals) {
    intervals.push_back(json::array({rat_to_string(lo), rat_to_string(hi)}));
  }
  return json{{"exact", std::move(exact)},
              {"intervals", std::move(intervals)},
              {"count", iso.total_negative_count}};
}

json certificate_to_json(const ImaginaryRootCertificate& cert) {
  json rational_b = json::array();
  for (const auto& b : cert.rational_imaginary_roots) rational_b.push_back(rat_to_string(b));
  json confirmations = json::array();
  for (const auto& c : cert.confirmations) {
    confirmations.push_back(json{{"b", rat_to_string(c.b)}, {"value", gauss_to_json(c.value)}});
  }
  return json{{"verdict", cert.verdict == Verdict::exists ? "exists" : "none"},
              {"gcd", poly_to_json(cert.gcd_poly)},
              {"negative_roots", neg_roots_to_json(cert.negative_roots)},
              {"rational_b", std::move(rational_b)},
              {"balanced_mod4", cert.balanced_mod4},
              {"irrational_candidates", cert.irrational_candidates},
              {"confirmations", std::move(confirmations)}};
}

json construction_to_json(const std::string& family,
                          const std::map<std::string, std::string>& params,
                          const GraphExpr& expr, const BigRat& root_im) {
  GaussRat value = expr.poly().eval_gauss(GaussRat(BigRat(0), root_im));
  json jparams = json::object();
  for (const auto& [key, val] : params) jparams[key] = val;
  return json{{"family", family},
              {"params", std::move(jparams)},
              {"order", expr.order().get_str()},
              {"alpha", expr.alpha()},
              {"poly", poly_to_json(expr.poly())},
              {"root", json::array({"0", rat_to_string(root_im)})},
              {"evaluation_value", gauss_to_json(value)},
              {"expression", expr.to_string()}};
}

json scan_report_to_json(const ScanReport& report) {
  json flagged = json::array();
  for (const auto& f : report.flagged) {
    flagged.push_back(json{{"line_index", f.line_index},
                           {"graph6", f.graph6},
                           {"certificate", certificate_to_json(f.certificate)}});
  }
  json skipped = json::array();
  for (const auto& s : report.skipped) {
    skipped.push_back(json{{"line_index", s.line_index}, {"error", s.message}});
  }
  return json{{"input_count", report.input_count},
              {"max_order_seen", report.max_order_seen},
              {"flagged", std::move(flagged)},
              {"skipped", std::move(skipped)}};
}

}  // namespace indroots
