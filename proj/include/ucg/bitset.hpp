#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ucg {

/// Dynamically sized bitset over 64-bit words; all binary operations assume equal sizes.
class Bitset
{
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  auto size() const -> std::size_t { return bits_; }
  auto words() const -> const std::vector<std::uint64_t>& { return words_; }

  auto set(std::size_t i) -> void { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  auto reset(std::size_t i) -> void { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  auto test(std::size_t i) const -> bool { return (words_[i / 64] >> (i % 64)) & 1; }

  auto set_all() -> void
  {
    for (auto& w : words_)
      w = ~std::uint64_t{0};
    trim();
  }

  auto count() const -> std::size_t
  {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  auto none() const -> bool
  {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  auto find_next(std::size_t from) const -> std::size_t
  {
    if (from >= bits_)
      return bits_;
    auto wi = from / 64;
    auto w = words_[wi] & (~std::uint64_t{0} << (from % 64));
    for (;;) {
      if (w != 0)
        return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return bits_;
      w = words_[wi];
    }
  }

  auto find_first() const -> std::size_t { return find_next(0); }

  auto operator&=(const Bitset& o) -> Bitset&
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }

  auto operator|=(const Bitset& o) -> Bitset&
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  /// this &= ~o
  auto subtract(const Bitset& o) -> Bitset&
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  auto flip() -> Bitset&
  {
    for (auto& w : words_)
      w = ~w;
    trim();
    return *this;
  }

  auto intersects(const Bitset& o) const -> bool
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i])
        return true;
    return false;
  }

  friend auto operator&(Bitset a, const Bitset& b) -> Bitset { return a &= b; }
  friend auto operator|(Bitset a, const Bitset& b) -> Bitset { return a |= b; }
  friend auto operator==(const Bitset&, const Bitset&) -> bool = default;

  template <typename F>
  auto for_each(F&& f) const -> void
  {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      auto w = words_[wi];
      while (w != 0) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  auto trim() -> void
  {
    if (bits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace ucg
