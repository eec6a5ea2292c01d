#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mtd {

// Interned identifier. Two symbols are equal iff their names are equal;
// ordering follows the names so that sets of symbols iterate alphabetically.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] std::uint32_t id() const { return id_; }

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
    std::uint32_t id_ = 0; // 0 is the empty name
};

} // namespace mtd

template <>
struct std::hash<mtd::Symbol> {
    std::size_t operator()(mtd::Symbol s) const noexcept { return s.id(); }
};
