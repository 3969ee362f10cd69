#include "grnet/errors.hpp"

#include <sstream>

namespace grnet {

std::string format_vertex(const std::vector<int>& coords) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ",";
    out << coords[i];
  }
  out << ")";
  return out.str();
}

std::string format_axes(const std::vector<int>& axes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i) out << ",";
    out << axes[i];
  }
  return out.str();
}

namespace {

std::string compose(const std::string& detail, const std::vector<int>& at,
                    const std::vector<int>& axes) {
  std::string msg = detail;
  if (!at.empty()) msg += " at vertex " + format_vertex(at);
  if (!axes.empty()) msg += " axes " + format_axes(axes);
  return msg;
}

}  // namespace

LatticeError::LatticeError(const std::string& detail, std::vector<int> at,
                           std::vector<int> axes)
    : Error(compose(detail, at, axes)),
      detail_(detail),
      at_(std::move(at)),
      axes_(std::move(axes)) {}

}  // namespace grnet
