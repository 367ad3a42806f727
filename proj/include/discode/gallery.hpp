#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "discode/expr.hpp"

namespace discode {

struct FactResult {
  bool passed = false;
  std::string detail;
};

/// A machine-checkable claim attached to a gallery entry.
struct Fact {
  std::string id;
  std::string statement;
  std::string location;
  std::function<FactResult()> check;
};

struct GalleryEntry {
  std::string name;
  std::map<std::string, double> parameters;
  Expr coefficient;
  std::vector<Expr> solutions;
  std::vector<Complex> singularities;
  std::vector<Fact> facts;
};

using GalleryParams = std::map<std::string, double>;

/// Names accepted by gallery_get, in listing order.
std::vector<std::string> gallery_names();
std::string gallery_description(const std::string& name);

/// Builds the named family. Throws DomainError for unknown names or out-of-range parameters.
GalleryEntry gallery_get(const std::string& name, const GalleryParams& params = {});

struct VerifyItem {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  bool passed = true;
  std::vector<VerifyItem> items;
};

/// Residual of every listed solution on |z| <= 0.9 (10^3 points) plus each fact.
VerifyReport gallery_verify(const GalleryEntry& entry);

inline constexpr double kGalleryResidualTolerance = 1e-9;

/// Resolves "gallery:<name>(<p>=<v>,...).<field>" with field A, f, f1, f2.
Expr resolve_gallery_reference(const std::string& ref);

}  // namespace discode
