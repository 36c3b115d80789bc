#include "fuzzalg/report.hpp"

#include <cstdio>

namespace fuzzalg {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Witness::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += fmt(point[i]);
  }
  s += "): lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
  if (!note.empty()) s += " [" + note + "]";
  return s;
}

bool CheckReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

const ConditionResult* CheckReport::find(std::string_view name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

ConditionResult& CheckReport::add(std::string name) {
  conditions.push_back(ConditionResult{std::move(name), true, std::nullopt, ""});
  return conditions.back();
}

std::string CheckReport::summary() const {
  std::string s;
  for (const auto& c : conditions) {
    s += c.pass ? "PASS " : "FAIL ";
    s += c.name;
    if (!c.pass && c.witness) s += " @ " + c.witness->str();
    if (!c.info.empty()) s += " (" + c.info + ")";
    s += "\n";
  }
  return s;
}

}  // namespace fuzzalg
