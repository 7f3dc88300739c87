#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace craigtab {

// Interned name. Equality is by identity; ordering is by spelling so that
// containers keyed by symbols iterate the same way in every process.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  std::string_view name() const { return *name_; }
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

 private:
  static const std::string kEmpty;
  std::uint32_t id_ = 0;
  const std::string* name_ = &kEmpty;
};

}  // namespace craigtab

template <>
struct std::hash<craigtab::Symbol> {
  std::size_t operator()(craigtab::Symbol s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};
