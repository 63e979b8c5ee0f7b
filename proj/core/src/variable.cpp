#include "alginv/exactpoly/variable.hpp"

#include <array>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "alginv/error.hpp"

namespace alginv {

namespace {

// Parameter names are interned once and never freed, so Var stays a trivially copyable
// 32-bit handle. Reads of interned slots are lock-free.
constexpr std::size_t kMaxParameters = 1u << 16;

struct InternTable {
  std::mutex mutex;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::array<std::atomic<const std::string*>, kMaxParameters> names{};
  std::uint32_t next = 0;
};

InternTable& table() {
  static InternTable* t = new InternTable();
  return *t;
}

}  // namespace

Var Var::parameter(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return Var(it->second);
  if (t.next >= kMaxParameters) throw CapExceeded("too many distinct parameter symbols");
  std::uint32_t id = t.next++;
  auto [pos, inserted] = t.ids.emplace(std::string(name), id);
  t.names[id].store(&pos->first, std::memory_order_release);
  return Var(id);
}

Var Var::coordinate(int slot, int index) {
  if (slot < 1 || slot > 0x7fff || index < 1 || index > 0xffff)
    throw DomainError("coordinate index out of range: slot " + std::to_string(slot) + ", index " +
                      std::to_string(index));
  return Var(kCoordinateBit | (static_cast<std::uint32_t>(slot) << 16) | static_cast<std::uint32_t>(index));
}

const std::string& Var::name() const {
  if (!is_parameter()) throw DomainError("coordinate variable has no parameter name");
  return *table().names[code_].load(std::memory_order_acquire);
}

std::strong_ordering operator<=>(Var a, Var b) {
  if (a.code_ == b.code_) return std::strong_ordering::equal;
  if (a.is_parameter() != b.is_parameter())
    return a.is_parameter() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_coordinate()) return a.code_ <=> b.code_;
  int c = a.name().compare(b.name());
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Var::to_string(bool dim2_names) const {
  if (is_parameter()) return name();
  if (dim2_names && index() <= 2) return (index() == 1 ? "x" : "y") + std::to_string(slot());
  return "x" + std::to_string(slot()) + "_" + std::to_string(index());
}

bool VariableTable::declares_parameter(std::string_view name) const {
  for (const auto& p : parameters)
    if (p == name) return true;
  return false;
}

bool is_valid_parameter_name(std::string_view name) {
  if (name.empty()) return false;
  unsigned char first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  // Reject anything shaped like a coordinate name.
  if (name.front() == 'x' || name.front() == 'y') {
    std::size_t k = 1;
    while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) ++k;
    if (k > 1) return false;
  }
  return true;
}

}  // namespace alginv
