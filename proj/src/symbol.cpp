#include "craigtab/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace craigtab {

namespace {

struct InternTable {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string_view, std::uint32_t> index;
};

InternTable& table() {
  static InternTable instance;
  return instance;
}

}  // namespace

const std::string Symbol::kEmpty;

Symbol::Symbol(std::string_view name) {
  InternTable& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  auto it = t.index.find(name);
  if (it != t.index.end()) {
    id_ = it->second;
    name_ = &t.names[id_ - 1];
    return;
  }
  t.names.emplace_back(name);
  id_ = static_cast<std::uint32_t>(t.names.size());
  name_ = &t.names.back();
  t.index.emplace(*name_, id_);
}

}  // namespace craigtab
