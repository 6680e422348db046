#include "fibecc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

#include "fibecc/codec.hpp"
#include "fibecc/errors.hpp"
#include "fibecc/keyspace.hpp"
#include "fibecc/scheme.hpp"
#include "text_util.hpp"

namespace fibecc::cli {
namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

std::mt19937_64 make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::mt19937_64(*seed);
  std::random_device device;
  return std::mt19937_64((static_cast<std::uint64_t>(device()) << 32U) | device());
}

Point parse_base_point(const std::string& text) {
  const auto trimmed = detail::trim(text);
  if (!trimmed.empty() && trimmed.front() == '(') return parse_point(trimmed);
  return parse_point("(" + std::string(trimmed) + ")");
}

AlphabetMap load_alphabet(const std::string& path, const CurveParams& curve) {
  if (path.empty()) return default_alphabet(curve);
  auto in = open_in(path);
  return read_alphabet(in, curve);
}

std::string format_block(const PointMatrix& block) {
  std::string out;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    if (i != 0) out += ';';
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (j != 0) out += ',';
      out += format_point(block(i, j));
    }
  }
  return out;
}

std::string block_symbols(const PointMatrix& block, const AlphabetMap& map) {
  std::string out;
  for (std::size_t i = 0; i < block.rows(); ++i) {
    if (i != 0) out += ';';
    for (std::size_t j = 0; j < block.cols(); ++j) out += map.symbol_of(block(i, j));
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> primes;
  for (const auto part : detail::split(text, ',')) {
    const auto token = detail::trim(part);
    if (token.empty()) continue;
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      primes.push_back(detail::parse_int<std::uint64_t>(token));
      continue;
    }
    const auto lo = detail::parse_int<std::uint64_t>(token.substr(0, dots));
    const auto hi = detail::parse_int<std::uint64_t>(token.substr(dots + 2));
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (is_prime(v)) primes.push_back(v);
    }
  }
  return primes;
}

void cmd_keygen(const KeygenOptions& opts, std::ostream& out, std::ostream& err) {
  const CurveParams curve(opts.curve.p, opts.curve.a, opts.curve.b);
  const SchemeParams params(curve, parse_base_point(opts.base_point));
  auto rng = make_rng(opts.seed);
  const auto beta = opts.beta ? *opts.beta : find_primitive_element(curve.modulus()).value();
  const auto r = opts.r ? *opts.r : random_exponent(curve.p(), rng);
  const auto [pub, priv] = gen_keypair(params, beta, r, opts.n);

  auto pub_file = open_out(opts.public_out);
  write_public_key(pub_file, pub);
  auto priv_file = open_out(opts.private_out);
  write_private_key(priv_file, priv);

  if (curve.p() <= kDefaultEnumerationLimit) {
    const auto total = enumerate_points(curve).size();
    if (params.order() != total) {
      err << "warning: E has order " << params.order() << " but the curve has " << total
          << " points; only messages inside <E> encrypt\n";
    }
  }
  out << "beta=" << beta << '\n' << "E1=" << pub.e1.value() << '\n';
}

void cmd_encrypt(const EncryptOptions& opts, std::ostream& out, std::ostream& err) {
  auto pub_in = open_in(opts.public_key);
  const auto pub = read_public_key(pub_in);
  const auto& params = pub.params;
  const auto map = load_alphabet(opts.alphabet, params.curve());
  auto rng = make_rng(opts.seed);
  const EphemeralKey eph{opts.e ? *opts.e : random_exponent(params.p(), rng)};

  const auto bundle = encrypt_message(pub, eph, opts.message, map);
  const auto [a_value, k] = derive_shared_encrypt(pub, eph);
  if (k.k % params.order() == 0) err << "warning: kE = O, the affine mask is trivial\n";

  auto file = open_out(opts.output);
  write_ciphertext(file, bundle);

  if (opts.verbose) {
    const auto key = key_matrix(pub.n, k, params.order());
    out << "a=" << a_value << '\n'
        << "k=" << k.k << '\n'
        << "K=" << format_matrix(key.entries()) << '\n'
        << "kE=" << format_point(scalar_mul(params.curve(), k.k % params.order(),
                                            params.base_point()))
        << '\n';
    const auto plain = pack_blocks(encode(map, opts.message), pub.n);
    for (std::size_t i = 0; i < bundle.blocks.size(); ++i) {
      out << "P" << i + 1 << "=" << format_block(plain[i]) << "  [" << block_symbols(plain[i], map)
          << "]\n";
      out << "C" << i + 1 << "=" << format_block(bundle.blocks[i]) << "  ["
          << block_symbols(bundle.blocks[i], map) << "]\n";
    }
  }
  out << "a=" << bundle.a_value << '\n' << "C=" << ciphertext_symbols(bundle, map) << '\n';
}

void cmd_decrypt(const DecryptOptions& opts, std::ostream& out) {
  auto priv_in = open_in(opts.private_key);
  const auto priv = read_private_key(priv_in);
  auto pub_in = open_in(opts.public_key);
  const auto pub = read_public_key(pub_in);
  auto ct_in = open_in(opts.ciphertext);
  const auto bundle = read_ciphertext(ct_in);
  const auto map = load_alphabet(opts.alphabet, pub.params.curve());
  out << decrypt_message(priv, pub.params, bundle, map) << '\n';
}

void cmd_inspect(const CurveOptions& opts, std::ostream& out) {
  const CurveParams curve(opts.p, opts.a, opts.b);
  const auto points = enumerate_points(curve);
  out << "curve " << format_curve(curve) << '\n' << "order " << points.size() << '\n';
  for (const auto& point : points) {
    out << std::left << std::setw(12) << format_point(point) << " order "
        << order_of_point(curve, point) << '\n';
  }
}

void cmd_alphabet(const AlphabetOptions& opts, std::ostream& out) {
  const auto map = opts.curve
                       ? default_alphabet(CurveParams(opts.curve->p, opts.curve->a, opts.curve->b))
                       : paper_alphabet();
  if (opts.output.empty()) {
    write_alphabet(out, map);
    return;
  }
  auto file = open_out(opts.output);
  write_alphabet(file, map);
}

void cmd_analyze(const AnalyzeOptions& opts, std::ostream& out) {
  std::vector<std::size_t> dims;
  for (const auto part : detail::split(opts.dims, ',')) {
    if (!detail::trim(part).empty()) dims.push_back(detail::parse_int<std::size_t>(part));
  }
  const auto reports = build_tables(parse_prime_list(opts.primes), dims);
  if (opts.csv) {
    out << "p,n,gl_order,probability\n";
    for (const auto& r : reports) {
      out << r.p << ',' << r.n << ','
          << (opts.exact ? r.gl_order.str() : r.gl_order_decimal) << ','
          << (opts.exact ? boost::multiprecision::denominator(r.probability).str().insert(0, "1/")
                         : r.probability_decimal)
          << '\n';
    }
    return;
  }
  out << std::left << std::setw(6) << "p" << std::setw(4) << "n" << std::setw(opts.exact ? 34 : 14)
      << "|GL_n(F_p)|"
      << "P(retrieve)\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(6) << r.p << std::setw(4) << r.n
        << std::setw(opts.exact ? 34 : 14) << (opts.exact ? r.gl_order.str() : r.gl_order_decimal)
        << r.probability_decimal << '\n';
  }
}

void cmd_demo(std::ostream& out) {
  const auto curve = paper_curve();
  const auto map = paper_alphabet();
  const auto points = enumerate_points(curve);
  const SchemeParams params(curve, Point(2, 14));

  out << "Curve y^2 = x^3 + 3x + 41 (mod 47), " << format_curve(curve) << '\n'
      << "|E| = " << points.size() << '\n'
      << "Points:";
  for (const auto& point : points) out << ' ' << format_point(point);
  out << "\nGenerator E = " << format_point(params.base_point()) << ", order N = "
      << params.order() << "\n\nAlphabet:\n";
  write_alphabet(out, map);

  out << "\n-- Public key --\n";
  const auto [pub, priv] = gen_keypair(params, 31, 14, 2);
  out << "beta = " << pub.beta.value() << ", r = " << priv.r << '\n'
      << "E1 = 31^14 mod 47 = " << pub.e1.value() << '\n';

  out << "\n-- Key generation and encryption --\n";
  const EphemeralKey eph{21};
  const auto [a_value, k] = derive_shared_encrypt(pub, eph);
  out << "e = " << eph.e << '\n'
      << "a = 31^21 mod 47 = " << a_value << '\n'
      << "k = 37^21 mod 47 = " << k.k << '\n';
  const auto key = key_matrix(2, k, params.order());
  out << "K = F_2^" << k.k << " mod 47 = " << format_matrix(key.entries()) << '\n';

  const std::string message = "COVID-19";
  const auto encoded = encode(map, message);
  out << "Plaintext " << message << " ->";
  for (const auto& point : encoded) out << ' ' << format_point(point);
  out << '\n';

  const auto mask = scalar_mul(curve, k.k % params.order(), params.base_point());
  out << "kE = " << format_point(mask) << '\n';
  const auto plain_blocks = pack_blocks(encoded, 2);
  std::vector<PointMatrix> cipher_blocks;
  for (std::size_t i = 0; i < plain_blocks.size(); ++i) {
    out << "P" << i + 1 << " = " << format_block(plain_blocks[i]) << "  ["
        << block_symbols(plain_blocks[i], map) << "]\n";
    cipher_blocks.push_back(encrypt_block(params, key, k, plain_blocks[i]));
    out << "C" << i + 1 << " = " << format_block(cipher_blocks.back()) << "  ["
        << block_symbols(cipher_blocks.back(), map) << "]\n";
  }
  const CiphertextBundle bundle{a_value, 2, message.size(), cipher_blocks};
  out << "Ciphertext " << ciphertext_symbols(bundle, map) << ", transmitted (a, C) = (" << a_value
      << ", " << ciphertext_symbols(bundle, map) << ")\n";

  out << "\n-- Decryption --\n";
  const auto k_recv = derive_shared_decrypt(a_value, priv, curve.modulus());
  out << "k = 38^14 mod 47 = " << k_recv.k << '\n';
  const auto inverse = decryption_matrix(2, k_recv, params.order());
  out << "D = F_2^-" << k_recv.k << " mod 47 = " << format_matrix(inverse.entries()) << '\n'
      << "-kE = " << format_point(negate(curve, mask)) << '\n';
  for (std::size_t i = 0; i < cipher_blocks.size(); ++i) {
    const auto recovered = decrypt_block(params, inverse, k_recv, cipher_blocks[i]);
    out << "P" << i + 1 << " = " << format_block(recovered) << "  ["
        << block_symbols(recovered, map) << "]\n";
  }
  out << "Plaintext " << decrypt_message(priv, params, bundle, map) << '\n';
}

}  // namespace fibecc::cli
