#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "indroots/certify.hpp"
#include "indroots/graph_expr.hpp"
#include "indroots/intpoly.hpp"
#include "indroots/polyroots.hpp"
#include "indroots/scan.hpp"

namespace indroots {

/// Polynomials serialize as arrays of decimal strings, index = degree,
/// so consumers never overflow 64-bit integers.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

std::string rat_to_string(const BigRat& q);
/// [re, im] as rational strings.
nlohmann::json gauss_to_json(const GaussRat& z);

nlohmann::json neg_roots_to_json(const NegRootIsolation& iso);

/// {verdict, gcd, negative_roots: {exact, intervals}, rational_b,
///  balanced_mod4, ...}.
nlohmann::json certificate_to_json(const ImaginaryRootCertificate& cert);

/// {family, params, order, alpha, poly, root, evaluation_value, ...}.
nlohmann::json construction_to_json(const std::string& family,
                                    const std::map<std::string, std::string>& params,
                                    const GraphExpr& expr, const BigRat& root_im);

/// Comparable scan report: no timing fields, so identical scans serialize
/// byte-identically regardless of worker count.
nlohmann::json scan_report_to_json(const ScanReport& report);

}  // namespace indroots
