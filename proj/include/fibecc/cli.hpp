#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fibecc::cli {

struct CurveOptions {
  std::uint64_t p = 47;
  std::uint64_t a = 3;
  std::uint64_t b = 41;
};

struct KeygenOptions {
  CurveOptions curve;
  std::string base_point = "2,14";  // "x,y" or "(x,y)"
  std::size_t n = 2;
  std::optional<std::uint64_t> beta;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> seed;
  std::string public_out = "public.key";
  std::string private_out = "private.key";
};

struct EncryptOptions {
  std::string public_key;
  std::string message;
  std::optional<std::uint64_t> e;
  std::optional<std::uint64_t> seed;
  std::string output = "cipher.txt";
  std::string alphabet;  // empty: default alphabet for the curve
  bool verbose = false;
};

struct DecryptOptions {
  std::string private_key;
  std::string public_key;
  std::string ciphertext;
  std::string alphabet;
};

struct AlphabetOptions {
  std::optional<CurveOptions> curve;  // empty: the paper table
  std::string output;                 // empty: stdout
};

struct AnalyzeOptions {
  std::string primes = "29..67";
  std::string dims = "3,4";
  bool csv = false;
  bool exact = false;
};

void cmd_keygen(const KeygenOptions& opts, std::ostream& out, std::ostream& err);
void cmd_encrypt(const EncryptOptions& opts, std::ostream& out, std::ostream& err);
void cmd_decrypt(const DecryptOptions& opts, std::ostream& out);
void cmd_inspect(const CurveOptions& opts, std::ostream& out);
void cmd_alphabet(const AlphabetOptions& opts, std::ostream& out);
void cmd_analyze(const AnalyzeOptions& opts, std::ostream& out);
void cmd_demo(std::ostream& out);

/// "29..67,71" -> primes in [29, 67] followed by 71. Plain integers are kept
/// as given (and rejected later if not prime).
std::vector<std::uint64_t> parse_prime_list(const std::string& text);

}  // namespace fibecc::cli
