#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fas {

/// Fixed-width bit packing of a symbol sequence (one symbol per location or
/// per edge) into 64-bit words. Symbols never straddle a word boundary.
class SymbolCodec {
 public:
  SymbolCodec() = default;
  SymbolCodec(std::size_t length, std::uint32_t alphabet_size);

  std::size_t length() const { return length_; }
  std::size_t words() const { return words_; }
  unsigned bits() const { return bits_; }

  std::uint32_t get(const std::uint64_t* packed, std::size_t i) const {
    return static_cast<std::uint32_t>(
        (packed[i / per_word_] >> ((i % per_word_) * bits_)) & mask_);
  }
  void set(std::uint64_t* packed, std::size_t i, std::uint32_t symbol) const {
    const unsigned shift = (i % per_word_) * bits_;
    std::uint64_t& w = packed[i / per_word_];
    w = (w & ~(mask_ << shift)) | (std::uint64_t{symbol} << shift);
  }

  void pack(std::span<const std::uint32_t> symbols, std::uint64_t* out) const;
  std::vector<std::uint64_t> pack(std::span<const std::uint32_t> symbols) const;
  void unpack(const std::uint64_t* packed, std::uint32_t* out) const;
  std::vector<std::uint32_t> unpack(const std::uint64_t* packed) const;

 private:
  std::size_t length_ = 0;
  unsigned bits_ = 1;
  std::size_t per_word_ = 64;
  std::size_t words_ = 0;
  std::uint64_t mask_ = 1;
};

/// Insert-only dedup store for packed states.
///
/// States live contiguously in an arena in insertion order, so a BFS can use
/// the arena itself as its queue. Lookup is open addressing over 32-bit
/// indices into the arena.
class PackedStateStore {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  explicit PackedStateStore(std::size_t words_per_state);

  /// Returns the index of the state and whether it was newly inserted.
  std::pair<std::uint32_t, bool> insert(const std::uint64_t* state);
  std::optional<std::uint32_t> find(const std::uint64_t* state) const;
  bool contains(const std::uint64_t* state) const {
    return find(state).has_value();
  }

  const std::uint64_t* state(std::uint32_t index) const {
    return arena_.data() + std::size_t{index} * words_;
  }
  std::size_t size() const { return count_; }
  std::size_t words_per_state() const { return words_; }
  std::size_t memory_bytes() const {
    return arena_.capacity() * sizeof(std::uint64_t) +
           table_.capacity() * sizeof(std::uint32_t);
  }

 private:
  std::uint64_t hash(const std::uint64_t* state) const;
  bool equal(std::uint32_t index, const std::uint64_t* state) const;
  void grow();

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> table_;
  std::size_t mask_;
};

}  // namespace fas
