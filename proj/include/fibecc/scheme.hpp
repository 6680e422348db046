#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibecc/codec.hpp"
#include "fibecc/elliptic_curve.hpp"
#include "fibecc/errors.hpp"
#include "fibecc/finite_field.hpp"
#include "fibecc/multinacci.hpp"

namespace fibecc {

/// Curve, base point E and its order N. N is the modulus for every integer
/// acting on points (key-matrix entries and the mask scalar k).
class SchemeParams {
 public:
  /// Computes N = order_of_point(base_point). Throws PointNotOnCurve, or
  /// RangeError when base_point is O.
  SchemeParams(CurveParams curve, Point base_point);

  const CurveParams& curve() const noexcept { return curve_; }
  const Point& base_point() const noexcept { return base_point_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t p() const noexcept { return curve_.p(); }

 private:
  CurveParams curve_;
  Point base_point_;
  std::uint64_t order_;
};

/// Recipient's published pair (beta, E1 = beta^r mod p).
struct PublicKey {
  SchemeParams params;
  FieldElement beta;
  FieldElement e1;
  std::size_t n = 2;
};

/// Secret exponent r, 1 < r < p - 1.
struct PrivateKey {
  std::uint64_t r;
};

/// Sender's one-time exponent e, 1 < e < p - 1.
struct EphemeralKey {
  std::uint64_t e;
};

/// Shared exponent k in [1, p); used as the key-matrix index.
struct SharedSecret {
  std::uint64_t k;
};

/// What the sender transmits: a = beta^e and the ciphertext blocks.
struct CiphertextBundle {
  std::uint64_t a_value = 0;
  std::size_t n = 2;
  std::size_t original_length = 0;
  std::vector<PointMatrix> blocks;
};

/// Throws NotPrimitive or RangeError.
std::pair<PublicKey, PrivateKey> gen_keypair(const SchemeParams& params, std::uint64_t beta,
                                             std::uint64_t r, std::size_t n = 2);

/// (a, k) = (beta^e, E1^e). Throws RangeError unless 1 < e < p - 1.
std::pair<std::uint64_t, SharedSecret> derive_shared_encrypt(const PublicKey& pub,
                                                             EphemeralKey eph);

/// k = a^r mod p.
SharedSecret derive_shared_decrypt(std::uint64_t a_value, const PrivateKey& priv,
                                   const PrimeModulus& p);

/// K = F_n^k mod N.
MultinacciMatrix key_matrix(std::size_t n, SharedSecret k, std::uint64_t order);
/// D = F_n^{-k} mod N.
MultinacciMatrix decryption_matrix(std::size_t n, SharedSecret k, std::uint64_t order);

/// (M B)(i, j) = sum_l M(i, l) * B(l, j) in the curve group.
PointMatrix mat_point_mul(const CurveParams& curve, const IntMatrix& m, const PointMatrix& block);

/// Adds `offset` to every entry.
PointMatrix add_to_all(const CurveParams& curve, const PointMatrix& block, const Point& offset);

/// C = K (P + kE J). Throws SubgroupMismatch when a plaintext point is not
/// annihilated by N (decryption could not recover it).
PointMatrix encrypt_block(const SchemeParams& params, const MultinacciMatrix& key, SharedSecret k,
                          const PointMatrix& plain);

/// P = D C - kE J.
PointMatrix decrypt_block(const SchemeParams& params, const MultinacciMatrix& inverse_key,
                          SharedSecret k, const PointMatrix& cipher);

CiphertextBundle encrypt_message(const PublicKey& pub, EphemeralKey eph, std::string_view text,
                                 const AlphabetMap& map);

std::string decrypt_message(const PrivateKey& priv, const SchemeParams& params,
                            const CiphertextBundle& bundle, const AlphabetMap& map);

/// Every ciphertext entry, column-major per block, as alphabet characters
/// (padding included).
std::string ciphertext_symbols(const CiphertextBundle& bundle, const AlphabetMap& map);

// Key and ciphertext files.
//   public:     p= a= b= E=(x,y) beta= E1= n=
//   private:    r=
//   ciphertext: a= n= len= then one line of ';'-separated points per block
void write_public_key(std::ostream& out, const PublicKey& pub);
PublicKey read_public_key(std::istream& in);
void write_private_key(std::ostream& out, const PrivateKey& priv);
PrivateKey read_private_key(std::istream& in);
void write_ciphertext(std::ostream& out, const CiphertextBundle& bundle);
CiphertextBundle read_ciphertext(std::istream& in);

/// Uniform draw from [2, p - 2]. Throws RangeError when p < 5.
template <typename Rng>
std::uint64_t random_exponent(std::uint64_t p, Rng& rng) {
  if (p < 5) throw RangeError("no exponent strictly between 1 and p-1 for p=" + std::to_string(p));
  std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
  return dist(rng);
}

}  // namespace fibecc
