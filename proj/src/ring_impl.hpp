#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringnc/ring.hpp"

namespace ringnc::detail {

/// Rings up to this size get precomputed addition and multiplication tables.
inline constexpr std::uint64_t kTableLimit = 512;

class RingImpl {
 public:
  using Code = Ring::Code;

  RingImpl(RingSpec spec, std::uint64_t size, std::uint64_t characteristic, bool field)
      : spec_(std::move(spec)), size_(size), characteristic_(characteristic), field_(field) {}
  virtual ~RingImpl() = default;

  const RingSpec& spec() const noexcept { return spec_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_field() const noexcept { return field_; }

  Code add(Code a, Code b) const {
    return add_table_.empty() ? add_raw(a, b) : add_table_[a * size_ + b];
  }
  Code mul(Code a, Code b) const {
    return mul_table_.empty() ? mul_raw(a, b) : mul_table_[a * size_ + b];
  }

  virtual Code one() const = 0;
  virtual Code add_raw(Code a, Code b) const = 0;
  virtual Code mul_raw(Code a, Code b) const = 0;
  virtual Code neg(Code a) const = 0;
  virtual std::optional<Code> inverse(Code a) const = 0;
  virtual std::string format(Code a) const = 0;
  virtual Code parse(std::string_view text) const = 0;

  virtual const std::vector<Ring>& factors() const {
    static const std::vector<Ring> none;
    return none;
  }

  /// Fills the lookup tables; called once, right after construction.
  void build_tables();

 private:
  RingSpec spec_;
  std::uint64_t size_;
  std::uint64_t characteristic_;
  bool field_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
};

/// Coefficients (constant first) of a polynomial in x read from text such as
/// `1+2x+x^2` or `3*x^2 - x`.  Coefficients are reduced mod p; the result may
/// have any degree.
std::vector<std::uint64_t> parse_polynomial(std::string_view text, std::uint64_t p);

/// Renders constant-first coefficients as `1+2x+x^2`; "0" when all are zero.
std::string format_polynomial(const std::vector<std::uint64_t>& coeffs);

}  // namespace ringnc::detail
