#include "genuskit/matrix_mod.hpp"

#include <array>
#include <string>
#include <utility>

#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

void check_shape(int size, std::int64_t modulus) {
  if (size < 1) throw InvalidArgument("matrix size must be >= 1, got " + std::to_string(size));
  if (modulus < 1) {
    throw InvalidArgument("matrix modulus must be >= 1, got " + std::to_string(modulus));
  }
}

// Laplace expansion along the first row of the size x size matrix `a`
// (row stride `stride`), entries already reduced mod m.
std::int64_t det_cofactor(const std::int64_t* a, int size, int stride, std::int64_t m) {
  if (size == 1) return a[0] % m;
  if (size == 2) {
    return reduce(mul_mod(a[0], a[stride + 1], m) - mul_mod(a[1], a[stride], m), m);
  }
  std::array<std::int64_t, kMaxMatrixSize * kMaxMatrixSize> minor{};
  std::int64_t total = 0;
  for (int col = 0; col < size; ++col) {
    if (a[col] == 0) continue;
    for (int i = 1; i < size; ++i) {
      int k = 0;
      for (int j = 0; j < size; ++j) {
        if (j == col) continue;
        minor[(i - 1) * (size - 1) + k++] = a[i * stride + j];
      }
    }
    std::int64_t term = mul_mod(a[col], det_cofactor(minor.data(), size - 1, size - 1, m), m);
    total = (col % 2 == 0) ? reduce(total + term, m) : reduce(total - term, m);
  }
  return total;
}

void check_det_size(int size) {
  if (size > kMaxMatrixSize) {
    throw UnsupportedSize("determinant supports size <= " + std::to_string(kMaxMatrixSize) +
                          ", got " + std::to_string(size));
  }
}

// Adjugate of a size x size matrix (row-major), written to `out`.
void adjugate(const std::int64_t* a, int size, std::int64_t m, std::int64_t* out) {
  if (size == 1) {
    out[0] = reduce(1, m);
    return;
  }
  std::array<std::int64_t, kMaxMatrixSize * kMaxMatrixSize> minor{};
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      // Cofactor C_ij goes to adj(j, i).
      int k = 0;
      for (int r = 0; r < size; ++r) {
        if (r == i) continue;
        for (int c = 0; c < size; ++c) {
          if (c == j) continue;
          minor[k++] = a[r * size + c];
        }
      }
      std::int64_t c = det_cofactor(minor.data(), size - 1, size - 1, m);
      out[j * size + i] = ((i + j) % 2 == 0) ? c : reduce(-c, m);
    }
  }
}

}  // namespace

MatModM::MatModM(int size, std::int64_t modulus) : size_(size), modulus_(modulus) {
  check_shape(size, modulus);
  entries_.assign(static_cast<std::size_t>(size) * size, 0);
}

MatModM MatModM::identity(int size, std::int64_t modulus) {
  MatModM out(size, modulus);
  for (int i = 0; i < size; ++i) out.set(i, i, 1);
  return out;
}

MatModM MatModM::from_rows(std::int64_t modulus,
                           const std::vector<std::vector<std::int64_t>>& rows) {
  MatModM out(static_cast<int>(rows.size()), modulus);
  for (int i = 0; i < out.size_; ++i) {
    if (static_cast<int>(rows[i].size()) != out.size_) {
      throw InvalidArgument("from_rows: matrix is not square");
    }
    for (int j = 0; j < out.size_; ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

MatModM MatModM::from_row_major(int size, std::int64_t modulus,
                                std::span<const std::int64_t> entries) {
  MatModM out(size, modulus);
  if (entries.size() != out.entries_.size()) {
    throw InvalidArgument("from_row_major: expected " + std::to_string(out.entries_.size()) +
                          " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t t = 0; t < entries.size(); ++t) out.entries_[t] = reduce(entries[t], modulus);
  return out;
}

void MatModM::set(int row, int col, std::int64_t value) {
  entries_[row * size_ + col] = reduce(value, modulus_);
}

std::ostream& operator<<(std::ostream& os, const MatModM& a) {
  os << '[';
  for (int i = 0; i < a.size(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < a.size(); ++j) os << (j ? "," : "") << a.at(i, j);
    os << ']';
  }
  return os << "] mod " << a.modulus();
}

static void require_compatible(const MatModM& a, const MatModM& b, const char* op) {
  if (a.size() != b.size() || a.modulus() != b.modulus()) {
    throw InvalidArgument(std::string(op) + ": shape or modulus mismatch");
  }
}

MatModM mat_mul(const MatModM& a, const MatModM& b) {
  require_compatible(a, b, "mat_mul");
  const int r = a.size();
  const std::int64_t m = a.modulus();
  MatModM out(r, m);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < r; ++k) acc += static_cast<__int128>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, static_cast<std::int64_t>(acc % m));
    }
  }
  return out;
}

MatModM mat_add(const MatModM& a, const MatModM& b) {
  require_compatible(a, b, "mat_add");
  MatModM out(a.size(), a.modulus());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      out.set(i, j, static_cast<std::int64_t>((static_cast<__int128>(a.at(i, j)) + b.at(i, j)) %
                                              a.modulus()));
    }
  }
  return out;
}

Residue det(const MatModM& a) {
  check_det_size(a.size());
  return Residue(det_cofactor(a.entries().data(), a.size(), a.size(), a.modulus()), a.modulus());
}

std::optional<MatModM> mat_inverse(const MatModM& a) {
  auto d_inv = det(a).inverse();
  if (!d_inv) return std::nullopt;
  const int r = a.size();
  std::vector<std::int64_t> adj(static_cast<std::size_t>(r) * r);
  adjugate(a.entries().data(), r, a.modulus(), adj.data());
  for (auto& x : adj) x = mul_mod(x, d_inv->value(), a.modulus());
  return MatModM::from_row_major(r, a.modulus(), adj);
}

MatModM transvection(int size, std::int64_t modulus, int row, int col) {
  if (row == col || row < 0 || col < 0 || row >= size || col >= size) {
    throw InvalidArgument("transvection: need distinct indices in range");
  }
  auto out = MatModM::identity(size, modulus);
  out.set(row, col, 1);
  return out;
}

std::vector<MatModM> elementary_generators(int size, std::int64_t modulus) {
  check_shape(size, modulus);
  std::vector<MatModM> gens;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j) gens.push_back(transvection(size, modulus, i, j));
    }
  }
  auto sign = MatModM::identity(size, modulus);
  sign.set(0, 0, -1);
  gens.push_back(sign);
  return gens;
}

// --- RingLayout -------------------------------------------------------------

RingLayout::RingLayout(std::int64_t modulus, std::vector<int> blocks)
    : modulus_(modulus), blocks_(std::move(blocks)) {
  if (modulus_ < 1) {
    throw InvalidArgument("ring layout: modulus must be >= 1, got " + std::to_string(modulus_));
  }
  if (blocks_.empty()) throw InvalidArgument("ring layout: need at least one block");
  for (int r : blocks_) {
    if (r < 1) throw InvalidArgument("ring layout: block sizes must be >= 1");
    check_det_size(r);
    offsets_.push_back(entry_count_);
    entry_count_ += r * r;
  }

  // Codes must fit in 64 bits: m^entry_count <= 2^64.
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 64;
  unsigned __int128 weight = 1;
  for (int t = 0; t < entry_count_; ++t) {
    if (block_weight_.size() < offsets_.size() && offsets_[block_weight_.size()] == t) {
      block_weight_.push_back(static_cast<std::uint64_t>(weight));
    }
    weight *= static_cast<unsigned __int128>(modulus_);
    if (weight > limit) {
      throw ResourceLimit("ring layout: " + std::to_string(modulus_) + "^" +
                          std::to_string(entry_count_) + " elements do not fit a 64-bit code");
    }
  }
  if (weight < limit) ambient_size_ = static_cast<std::uint64_t>(weight);

  MatTuple id;
  for (int r : blocks_) id.push_back(MatModM::identity(r, modulus_));
  identity_ = encode(id);
}

void RingLayout::unpack(Code code, std::int64_t* digits) const {
  const auto m = static_cast<std::uint64_t>(modulus_);
  for (int t = 0; t < entry_count_; ++t) {
    digits[t] = static_cast<std::int64_t>(code % m);
    code /= m;
  }
}

Code RingLayout::pack(const std::int64_t* digits) const {
  const auto m = static_cast<std::uint64_t>(modulus_);
  Code code = 0;
  for (int t = entry_count_ - 1; t >= 0; --t) code = code * m + static_cast<std::uint64_t>(digits[t]);
  return code;
}

Code RingLayout::encode(const MatTuple& tuple) const {
  if (tuple.size() != blocks_.size()) {
    throw InvalidArgument("encode: expected " + std::to_string(blocks_.size()) +
                          " blocks, got " + std::to_string(tuple.size()));
  }
  std::vector<std::int64_t> digits(entry_count_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (tuple[b].size() != blocks_[b] || tuple[b].modulus() != modulus_) {
      throw InvalidArgument("encode: block " + std::to_string(b) + " has wrong size or modulus");
    }
    auto e = tuple[b].entries();
    std::copy(e.begin(), e.end(), digits.begin() + offsets_[b]);
  }
  return pack(digits.data());
}

MatTuple RingLayout::decode(Code code) const {
  std::vector<std::int64_t> digits(entry_count_);
  unpack(code, digits.data());
  MatTuple out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const int r = blocks_[b];
    out.push_back(MatModM::from_row_major(
        r, modulus_, std::span<const std::int64_t>(digits.data() + offsets_[b], r * r)));
  }
  return out;
}

namespace {
// Upper bound on entry_count: 2^64 >= m^n with m >= 2 gives n <= 64.
constexpr int kMaxEntries = 64;
}  // namespace

Code RingLayout::multiply(Code a, Code b) const {
  if (modulus_ == 1) return 0;
  std::array<std::int64_t, kMaxEntries> x{}, y{}, z{};
  unpack(a, x.data());
  unpack(b, y.data());
  for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
    const int r = blocks_[blk];
    const int off = offsets_[blk];
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        __int128 acc = 0;
        for (int k = 0; k < r; ++k) {
          acc += static_cast<__int128>(x[off + i * r + k]) * y[off + k * r + j];
        }
        z[off + i * r + j] = static_cast<std::int64_t>(acc % modulus_);
      }
    }
  }
  return pack(z.data());
}

Code RingLayout::add(Code a, Code b) const {
  if (modulus_ == 1) return 0;
  std::array<std::int64_t, kMaxEntries> x{}, y{};
  unpack(a, x.data());
  unpack(b, y.data());
  for (int t = 0; t < entry_count_; ++t) {
    x[t] = static_cast<std::int64_t>((static_cast<__int128>(x[t]) + y[t]) % modulus_);
  }
  return pack(x.data());
}

Code RingLayout::scale(Code a, std::int64_t c) const {
  if (modulus_ == 1) return 0;
  std::array<std::int64_t, kMaxEntries> x{};
  unpack(a, x.data());
  const std::int64_t cr = reduce(c, modulus_);
  for (int t = 0; t < entry_count_; ++t) x[t] = mul_mod(x[t], cr, modulus_);
  return pack(x.data());
}

bool RingLayout::is_unit(Code a) const {
  std::array<std::int64_t, kMaxEntries> x{};
  unpack(a, x.data());
  for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
    std::int64_t d = det_cofactor(x.data() + offsets_[blk], blocks_[blk], blocks_[blk], modulus_);
    if (gcd(d, modulus_) != 1) return false;
  }
  return true;
}

std::optional<Code> RingLayout::inverse(Code a) const {
  std::array<std::int64_t, kMaxEntries> x{}, z{};
  unpack(a, x.data());
  for (std::size_t blk = 0; blk < blocks_.size(); ++blk) {
    const int r = blocks_[blk];
    const std::int64_t* src = x.data() + offsets_[blk];
    auto d_inv = inverse_mod(det_cofactor(src, r, r, modulus_), modulus_);
    if (!d_inv) return std::nullopt;
    std::int64_t* dst = z.data() + offsets_[blk];
    adjugate(src, r, modulus_, dst);
    for (int t = 0; t < r * r; ++t) dst[t] = mul_mod(dst[t], *d_inv, modulus_);
  }
  return pack(z.data());
}

Code RingLayout::block_code(Code a, std::size_t block) const {
  std::array<std::int64_t, kMaxEntries> x{};
  unpack(a, x.data());
  const int r = blocks_.at(block);
  const auto m = static_cast<std::uint64_t>(modulus_);
  Code code = 0;
  for (int t = r * r - 1; t >= 0; --t) {
    code = code * m + static_cast<std::uint64_t>(x[offsets_[block] + t]);
  }
  return code;
}

Code RingLayout::combine(std::span<const Code> block_codes) const {
  if (block_codes.size() != blocks_.size()) {
    throw InvalidArgument("combine: expected one code per block");
  }
  Code code = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) code += block_codes[b] * block_weight_[b];
  return code;
}

Code RingLayout::embed(std::size_t block, const MatModM& matrix) const {
  MatTuple tuple;
  for (int r : blocks_) tuple.push_back(MatModM::identity(r, modulus_));
  tuple.at(block) = matrix;
  return encode(tuple);
}

RingLayout RingLayout::block_layout(std::size_t block) const {
  return RingLayout(modulus_, {blocks_.at(block)});
}

FiniteGroup::Operation RingLayout::multiplication() const {
  return [layout = *this](Code a, Code b) { return layout.multiply(a, b); };
}

// --- Groups -----------------------------------------------------------------

FiniteGroup enumerate_gl(int size, std::int64_t modulus, std::size_t cap) {
  check_shape(size, modulus);
  RingLayout layout(modulus, {size});
  auto ambient = layout.ambient_size();
  if (!ambient || *ambient > cap) {
    throw ResourceLimit("enumerate_gl: " + std::to_string(modulus) + "^" +
                        std::to_string(size * size) + " matrices exceed the cap of " +
                        std::to_string(cap));
  }
  std::vector<Code> carrier;
  for (Code c = 0; c < *ambient; ++c) {
    if (layout.is_unit(c)) carrier.push_back(c);
  }
  return FiniteGroup(std::move(carrier), layout.multiplication(), layout.identity());
}

FiniteGroup stable_image(int size, std::int64_t modulus, std::size_t cap) {
  FiniteGroup gl = enumerate_gl(size, modulus, cap);
  RingLayout layout(modulus, {size});
  std::vector<Code> gens;
  for (const auto& g : elementary_generators(size, modulus)) gens.push_back(layout.encode({g}));
  return gl.restrict_to(subgroup_closure(gl, gens));
}

}  // namespace genuskit
