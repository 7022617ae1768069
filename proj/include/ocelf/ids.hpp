#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ocelf {

/// Dense index into one of the event log's interned tables. The tag keeps
/// event, object, type and activity indices from mixing.
template <class Tag>
struct Index {
  std::uint32_t value = 0;

  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}
  constexpr explicit Index(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}

  friend constexpr auto operator<=>(Index, Index) = default;
};

using EventIndex = Index<struct EventTag>;
using ObjectIndex = Index<struct ObjectTag>;
using TypeIndex = Index<struct TypeTag>;
using ActivityIndex = Index<struct ActivityTag>;

}  // namespace ocelf

template <class Tag>
struct std::hash<ocelf::Index<Tag>> {
  std::size_t operator()(ocelf::Index<Tag> idx) const noexcept {
    return std::hash<std::uint32_t>{}(idx.value);
  }
};
