#include "nsp/interval.hpp"

#include <stdexcept>

namespace nsp {

std::vector<std::string> validateInterval(const SyncInterval& i) {
  std::vector<std::string> out = validateDyck(i.lower);
  for (auto& v : validateDyck(i.upper)) out.push_back(v);
  if (!out.empty()) return out;
  if (i.lower.size() != i.upper.size()) {
    out.push_back("interval: paths of different sizes");
    return out;
  }
  if (dyckType(i.lower) != dyckType(i.upper))
    out.push_back("interval: type words differ");
  if (!tamariLeq(i.lower, i.upper))
    out.push_back("interval: lower path not below upper path");
  return out;
}

std::string printInterval(const SyncInterval& i) {
  return "[" + i.lower.steps + "," + i.upper.steps + "]";
}

SyncInterval parseInterval(const std::string& text) {
  if (text.size() < 5 || text.front() != '[' || text.back() != ']')
    throw std::runtime_error("interval parse: expected [P,Q]");
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::runtime_error("interval parse: missing comma");
  std::string p = text.substr(1, comma - 1);
  std::string q = text.substr(comma + 1, text.size() - comma - 2);
  if (!isDyck(p)) throw std::runtime_error("interval parse: lower path is not a Dyck word");
  if (!isDyck(q)) throw std::runtime_error("interval parse: upper path is not a Dyck word");
  return SyncInterval{DyckWord(p), DyckWord(q)};
}

SyncInterval mirInterval(const SyncInterval& i) {
  return SyncInterval{mirDyck(i.upper), mirDyck(i.lower)};
}

int contStat(const SyncInterval& i) { return dyckContacts(i.lower); }

}  // namespace nsp
