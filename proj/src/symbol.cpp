#include "mtd/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace mtd {

namespace {

struct InternTable {
    std::mutex mutex;
    std::deque<std::string> names{std::string{}};
    std::unordered_map<std::string_view, std::uint32_t> ids{{std::string_view{}, 0}};
};

InternTable& table() {
    static InternTable t;
    return t;
}

} // namespace

Symbol::Symbol(std::string_view name) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    if (auto it = t.ids.find(name); it != t.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
    // deque never relocates elements, so the view stays valid
    t.ids.emplace(t.names.back(), id_);
}

const std::string& Symbol::name() const {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    return t.names[id_];
}

std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.name() <=> b.name();
}

} // namespace mtd
