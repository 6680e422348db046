#include <iostream>

#include <CLI11.hpp>

#include "fibecc/cli.hpp"
#include "fibecc/errors.hpp"

namespace {

void add_curve_flags(CLI::App* cmd, fibecc::cli::CurveOptions& curve) {
  cmd->add_option("--p", curve.p, "Field prime")->capture_default_str();
  cmd->add_option("--a", curve.a, "Curve coefficient a")->capture_default_str();
  cmd->add_option("--b", curve.b, "Curve coefficient b")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multinacci-matrix keyed elliptic-curve ElGamal cipher"};
  app.require_subcommand(1);

  fibecc::cli::KeygenOptions keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a public/private key pair");
  add_curve_flags(keygen_cmd, keygen.curve);
  keygen_cmd->add_option("--E", keygen.base_point, "Base point x,y")->capture_default_str();
  keygen_cmd->add_option("--n", keygen.n, "Key matrix dimension")->capture_default_str();
  keygen_cmd->add_option("--beta", keygen.beta, "Primitive element (default: smallest)");
  keygen_cmd->add_option("--r", keygen.r, "Secret exponent (default: random)");
  keygen_cmd->add_option("--seed", keygen.seed, "Seed for random choices");
  keygen_cmd->add_option("--public-out", keygen.public_out)->capture_default_str();
  keygen_cmd->add_option("--private-out", keygen.private_out)->capture_default_str();

  fibecc::cli::EncryptOptions encrypt;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message");
  encrypt_cmd->add_option("--pub", encrypt.public_key, "Public key file")->required();
  encrypt_cmd->add_option("--message,-m", encrypt.message, "Plaintext")->required();
  encrypt_cmd->add_option("--e", encrypt.e, "Ephemeral exponent (default: random)");
  encrypt_cmd->add_option("--seed", encrypt.seed, "Seed for random choices");
  encrypt_cmd->add_option("--out,-o", encrypt.output, "Ciphertext file")->capture_default_str();
  encrypt_cmd->add_option("--alphabet", encrypt.alphabet, "Alphabet file");
  encrypt_cmd->add_flag("--verbose,-v", encrypt.verbose, "Print intermediate values");

  fibecc::cli::DecryptOptions decrypt;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt_cmd->add_option("--priv", decrypt.private_key, "Private key file")->required();
  decrypt_cmd->add_option("--pub", decrypt.public_key, "Public key file")->required();
  decrypt_cmd->add_option("--in,-i", decrypt.ciphertext, "Ciphertext file")->required();
  decrypt_cmd->add_option("--alphabet", decrypt.alphabet, "Alphabet file");

  fibecc::cli::CurveOptions inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "List curve points and their orders");
  add_curve_flags(inspect_cmd, inspect);

  fibecc::cli::AlphabetOptions alphabet;
  fibecc::cli::CurveOptions alphabet_curve;
  auto* alphabet_cmd = app.add_subcommand("alphabet", "Print the paper alphabet or derive one");
  add_curve_flags(alphabet_cmd, alphabet_curve);
  alphabet_cmd->add_option("--out,-o", alphabet.output, "Write to file instead of stdout");

  fibecc::cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Key-space and brute-force tables");
  analyze_cmd->add_option("--primes", analyze.primes, "e.g. 29..67 or 29,31")
      ->capture_default_str();
  analyze_cmd->add_option("--n", analyze.dims, "Dimensions, e.g. 3,4")->capture_default_str();
  analyze_cmd->add_flag("--csv", analyze.csv, "Comma-separated output");
  analyze_cmd->add_flag("--exact", analyze.exact, "Exact integers");

  auto* demo_cmd = app.add_subcommand("demo", "Run the COVID-19 worked example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (keygen_cmd->parsed()) {
      fibecc::cli::cmd_keygen(keygen, std::cout, std::cerr);
    } else if (encrypt_cmd->parsed()) {
      fibecc::cli::cmd_encrypt(encrypt, std::cout, std::cerr);
    } else if (decrypt_cmd->parsed()) {
      fibecc::cli::cmd_decrypt(decrypt, std::cout);
    } else if (inspect_cmd->parsed()) {
      fibecc::cli::cmd_inspect(inspect, std::cout);
    } else if (alphabet_cmd->parsed()) {
      const bool custom = alphabet_cmd->count("--p") + alphabet_cmd->count("--a") +
                              alphabet_cmd->count("--b") > 0;
      if (custom) alphabet.curve = alphabet_curve;
      fibecc::cli::cmd_alphabet(alphabet, std::cout);
    } else if (analyze_cmd->parsed()) {
      fibecc::cli::cmd_analyze(analyze, std::cout);
    } else if (demo_cmd->parsed()) {
      fibecc::cli::cmd_demo(std::cout);
    }
  } catch (const fibecc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
