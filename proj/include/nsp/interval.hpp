#pragma once

#include <string>
#include <vector>

#include "nsp/dyck.hpp"

namespace nsp {

// Tamari interval [P, Q] with P <= Q and equal type words ("synchronized").
struct SyncInterval {
  DyckWord lower;  // P
  DyckWord upper;  // Q

  int size() const { return lower.size(); }
  bool operator==(const SyncInterval&) const = default;
  auto operator<=>(const SyncInterval&) const = default;
};

std::vector<std::string> validateInterval(const SyncInterval& i);

// Text form "[P,Q]".
std::string printInterval(const SyncInterval& i);
SyncInterval parseInterval(const std::string& text);

SyncInterval mirInterval(const SyncInterval& i);

// Non-initial contacts of the lower path.
int contStat(const SyncInterval& i);

}  // namespace nsp
