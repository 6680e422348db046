#include "fibecc/scheme.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "text_util.hpp"

namespace fibecc {
namespace {

void require_exponent_range(std::uint64_t value, std::uint64_t p, const char* name) {
  if (value <= 1 || value >= p - 1) {
    throw RangeError(std::string(name) + "=" + std::to_string(value) +
                     " must satisfy 1 < " + name + " < " + std::to_string(p - 1));
  }
}

// "key=value" lines; anything else is returned in order as body lines.
struct KeyValueFile {
  std::map<std::string, std::string, std::less<>> fields;
  std::vector<std::string> body;

  const std::string& get(std::string_view key) const {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("missing field '" + std::string(key) + "='");
    return it->second;
  }
  std::uint64_t get_uint(std::string_view key) const {
    return detail::parse_int<std::uint64_t>(get(key));
  }
};

KeyValueFile read_key_value(std::istream& in) {
  KeyValueFile file;
  std::string line;
  while (std::getline(in, line)) {
    const auto view = detail::trim(line);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq != std::string_view::npos && view.front() != '(' && view.front() != 'O') {
      file.fields.emplace(std::string(detail::trim(view.substr(0, eq))),
                          std::string(detail::trim(view.substr(eq + 1))));
    } else {
      file.body.emplace_back(view);
    }
  }
  return file;
}

}  // namespace

SchemeParams::SchemeParams(CurveParams curve, Point base_point)
    : curve_(curve), base_point_(base_point), order_(0) {
  if (base_point_.is_infinity()) throw RangeError("base point must not be O");
  order_ = order_of_point(curve_, base_point_);
}

std::pair<PublicKey, PrivateKey> gen_keypair(const SchemeParams& params, std::uint64_t beta,
                                             std::uint64_t r, std::size_t n) {
  const FieldElement b(beta, params.curve().modulus());
  if (beta == 0 || beta >= params.p() || !is_primitive_element(b)) {
    throw NotPrimitive(std::to_string(beta) + " does not generate F_" +
                       std::to_string(params.p()) + "^*");
  }
  require_exponent_range(r, params.p(), "r");
  if (n < 2) throw RangeError("matrix dimension n must be >= 2");
  return {PublicKey{params, b, mod_pow(b, r), n}, PrivateKey{r}};
}

std::pair<std::uint64_t, SharedSecret> derive_shared_encrypt(const PublicKey& pub,
                                                             EphemeralKey eph) {
  require_exponent_range(eph.e, pub.params.p(), "e");
  return {mod_pow(pub.beta, eph.e).value(), SharedSecret{mod_pow(pub.e1, eph.e).value()}};
}

SharedSecret derive_shared_decrypt(std::uint64_t a_value, const PrivateKey& priv,
                                   const PrimeModulus& p) {
  return SharedSecret{pow_mod(a_value, priv.r, p.value())};
}

MultinacciMatrix key_matrix(std::size_t n, SharedSecret k, std::uint64_t order) {
  return power_matrix(MultinacciParams(n, order), static_cast<std::int64_t>(k.k));
}

MultinacciMatrix decryption_matrix(std::size_t n, SharedSecret k, std::uint64_t order) {
  return power_matrix(MultinacciParams(n, order), -static_cast<std::int64_t>(k.k));
}

PointMatrix mat_point_mul(const CurveParams& curve, const IntMatrix& m, const PointMatrix& block) {
  if (m.cols() != block.rows()) {
    throw DimensionMismatch("key matrix has " + std::to_string(m.cols()) + " columns, block has " +
                            std::to_string(block.rows()) + " rows");
  }
  for (const auto& entry : block.data()) {
    if (!is_on_curve(curve, entry)) {
      throw PointNotOnCurve(format_point(entry) + " is not on " + format_curve(curve));
    }
  }
  PointMatrix out(m.rows(), block.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      Point acc;
      for (std::size_t l = 0; l < m.cols(); ++l) {
        acc = add(curve, acc, scalar_mul(curve, m(i, l), block(l, j)));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

PointMatrix add_to_all(const CurveParams& curve, const PointMatrix& block, const Point& offset) {
  PointMatrix out = block;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = add(curve, block(i, j), offset);
  }
  return out;
}

PointMatrix encrypt_block(const SchemeParams& params, const MultinacciMatrix& key, SharedSecret k,
                          const PointMatrix& plain) {
  const auto& curve = params.curve();
  for (const auto& entry : plain.data()) {
    if (!scalar_mul(curve, params.order(), entry).is_infinity()) {
      throw SubgroupMismatch(format_point(entry) + " is not killed by the base point order " +
                             std::to_string(params.order()));
    }
  }
  const Point mask = scalar_mul(curve, k.k % params.order(), params.base_point());
  return mat_point_mul(curve, key.entries(), add_to_all(curve, plain, mask));
}

PointMatrix decrypt_block(const SchemeParams& params, const MultinacciMatrix& inverse_key,
                          SharedSecret k, const PointMatrix& cipher) {
  const auto& curve = params.curve();
  const Point mask = scalar_mul(curve, k.k % params.order(), params.base_point());
  return add_to_all(curve, mat_point_mul(curve, inverse_key.entries(), cipher),
                    negate(curve, mask));
}

CiphertextBundle encrypt_message(const PublicKey& pub, EphemeralKey eph, std::string_view text,
                                 const AlphabetMap& map) {
  if (!(map.curve() == pub.params.curve())) {
    throw SizeMismatch("alphabet curve differs from the key's curve");
  }
  const auto [a_value, k] = derive_shared_encrypt(pub, eph);
  const auto key = key_matrix(pub.n, k, pub.params.order());
  CiphertextBundle bundle{a_value, pub.n, text.size(), {}};
  for (const auto& block : pack_blocks(encode(map, text), pub.n)) {
    bundle.blocks.push_back(encrypt_block(pub.params, key, k, block));
  }
  return bundle;
}

std::string decrypt_message(const PrivateKey& priv, const SchemeParams& params,
                            const CiphertextBundle& bundle, const AlphabetMap& map) {
  const auto k = derive_shared_decrypt(bundle.a_value, priv, params.curve().modulus());
  const auto inverse = decryption_matrix(bundle.n, k, params.order());
  std::vector<PointMatrix> plain;
  plain.reserve(bundle.blocks.size());
  for (const auto& block : bundle.blocks) plain.push_back(decrypt_block(params, inverse, k, block));
  return decode(map, unpack_blocks(plain, bundle.n, bundle.original_length));
}

std::string ciphertext_symbols(const CiphertextBundle& bundle, const AlphabetMap& map) {
  return decode(map, unpack_blocks(bundle.blocks, bundle.n,
                                   bundle.blocks.size() * bundle.n * bundle.n));
}

void write_public_key(std::ostream& out, const PublicKey& pub) {
  const auto& curve = pub.params.curve();
  out << "p=" << curve.p() << '\n'
      << "a=" << curve.a() << '\n'
      << "b=" << curve.b() << '\n'
      << "E=" << format_point(pub.params.base_point()) << '\n'
      << "beta=" << pub.beta.value() << '\n'
      << "E1=" << pub.e1.value() << '\n'
      << "n=" << pub.n << '\n';
}

PublicKey read_public_key(std::istream& in) {
  const auto file = read_key_value(in);
  const CurveParams curve(file.get_uint("p"), file.get_uint("a"), file.get_uint("b"));
  const SchemeParams params(curve, parse_point(file.get("E")));
  const FieldElement beta(file.get_uint("beta"), curve.modulus());
  if (!is_primitive_element(beta)) {
    throw NotPrimitive("beta=" + file.get("beta") + " in public key");
  }
  const auto e1 = file.get_uint("E1");
  if (e1 == 0 || e1 >= curve.p()) throw RangeError("E1 must lie in [1, p)");
  const auto n = file.get_uint("n");
  if (n < 2) throw RangeError("matrix dimension n must be >= 2");
  return PublicKey{params, beta, FieldElement(e1, curve.modulus()), static_cast<std::size_t>(n)};
}

void write_private_key(std::ostream& out, const PrivateKey& priv) { out << "r=" << priv.r << '\n'; }

PrivateKey read_private_key(std::istream& in) {
  return PrivateKey{read_key_value(in).get_uint("r")};
}

void write_ciphertext(std::ostream& out, const CiphertextBundle& bundle) {
  out << "a=" << bundle.a_value << '\n'
      << "n=" << bundle.n << '\n'
      << "len=" << bundle.original_length << '\n';
  for (const auto& block : bundle.blocks) {
    std::string line;
    for (std::size_t j = 0; j < block.cols(); ++j) {
      for (std::size_t i = 0; i < block.rows(); ++i) {
        if (!line.empty()) line += ';';
        line += format_point(block(i, j));
      }
    }
    out << line << '\n';
  }
}

CiphertextBundle read_ciphertext(std::istream& in) {
  const auto file = read_key_value(in);
  CiphertextBundle bundle;
  bundle.a_value = file.get_uint("a");
  bundle.n = static_cast<std::size_t>(file.get_uint("n"));
  bundle.original_length = static_cast<std::size_t>(file.get_uint("len"));
  if (bundle.n < 1) throw ParseError("n must be positive");
  for (const auto& line : file.body) {
    const auto cells = detail::split(line, ';');
    if (cells.size() != bundle.n * bundle.n) {
      throw ParseError("block line has " + std::to_string(cells.size()) + " points, expected " +
                       std::to_string(bundle.n * bundle.n));
    }
    PointMatrix block(bundle.n, bundle.n);
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      block(idx % bundle.n, idx / bundle.n) = parse_point(cells[idx]);
    }
    bundle.blocks.push_back(std::move(block));
  }
  if (bundle.original_length > bundle.blocks.size() * bundle.n * bundle.n) {
    throw LengthOverflow("len=" + std::to_string(bundle.original_length) +
                         " exceeds the block entries");
  }
  return bundle;
}

}  // namespace fibecc
