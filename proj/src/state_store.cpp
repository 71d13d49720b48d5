#include "fas/state_store.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "fas/errors.hpp"

namespace fas {

SymbolCodec::SymbolCodec(std::size_t length, std::uint32_t alphabet_size)
    : length_(length) {
  bits_ = alphabet_size <= 2 ? 1u
                             : static_cast<unsigned>(
                                   std::bit_width(alphabet_size - 1));
  per_word_ = 64 / bits_;
  words_ = std::max<std::size_t>(1, (length + per_word_ - 1) / per_word_);
  mask_ = bits_ == 64 ? ~0ULL : (1ULL << bits_) - 1;
}

void SymbolCodec::pack(std::span<const std::uint32_t> symbols,
                       std::uint64_t* out) const {
  std::fill(out, out + words_, 0);
  for (std::size_t i = 0; i < symbols.size(); ++i) set(out, i, symbols[i]);
}

std::vector<std::uint64_t> SymbolCodec::pack(
    std::span<const std::uint32_t> symbols) const {
  std::vector<std::uint64_t> out(words_);
  pack(symbols, out.data());
  return out;
}

void SymbolCodec::unpack(const std::uint64_t* packed,
                         std::uint32_t* out) const {
  for (std::size_t i = 0; i < length_; ++i) out[i] = get(packed, i);
}

std::vector<std::uint32_t> SymbolCodec::unpack(
    const std::uint64_t* packed) const {
  std::vector<std::uint32_t> out(length_);
  unpack(packed, out.data());
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

PackedStateStore::PackedStateStore(std::size_t words_per_state)
    : words_(words_per_state), table_(1024, kNone), mask_(1023) {}

std::uint64_t PackedStateStore::hash(const std::uint64_t* state) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < words_; ++i) h = mix(h ^ state[i]) + i;
  return h;
}

bool PackedStateStore::equal(std::uint32_t index,
                             const std::uint64_t* state) const {
  return std::memcmp(this->state(index), state,
                     words_ * sizeof(std::uint64_t)) == 0;
}

std::optional<std::uint32_t> PackedStateStore::find(
    const std::uint64_t* state) const {
  for (std::size_t slot = hash(state) & mask_;; slot = (slot + 1) & mask_) {
    const std::uint32_t idx = table_[slot];
    if (idx == kNone) return std::nullopt;
    if (equal(idx, state)) return idx;
  }
}

std::pair<std::uint32_t, bool> PackedStateStore::insert(
    const std::uint64_t* state) {
  if ((count_ + 1) * 10 > table_.size() * 7) grow();
  std::size_t slot = hash(state) & mask_;
  for (;; slot = (slot + 1) & mask_) {
    const std::uint32_t idx = table_[slot];
    if (idx == kNone) break;
    if (equal(idx, state)) return {idx, false};
  }
  if (count_ >= kNone) throw ResourceLimitError("state store index overflow");
  const auto idx = static_cast<std::uint32_t>(count_++);
  arena_.insert(arena_.end(), state, state + words_);
  table_[slot] = idx;
  return {idx, true};
}

void PackedStateStore::grow() {
  std::vector<std::uint32_t> next(table_.size() * 2, kNone);
  const std::size_t next_mask = next.size() - 1;
  for (std::uint32_t idx = 0; idx < count_; ++idx) {
    std::size_t slot = hash(state(idx)) & next_mask;
    while (next[slot] != kNone) slot = (slot + 1) & next_mask;
    next[slot] = idx;
  }
  table_ = std::move(next);
  mask_ = next_mask;
}

}  // namespace fas
