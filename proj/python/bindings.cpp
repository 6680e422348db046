#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fibecc/codec.hpp"
#include "fibecc/elliptic_curve.hpp"
#include "fibecc/errors.hpp"
#include "fibecc/finite_field.hpp"
#include "fibecc/keyspace.hpp"
#include "fibecc/multinacci.hpp"
#include "fibecc/scheme.hpp"

namespace py = pybind11;
using namespace fibecc;

namespace {

py::object to_pyint(const BigInt& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

std::vector<std::vector<std::uint64_t>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

IntMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Point>> to_rows(const PointMatrix& m) {
  std::vector<std::vector<Point>> rows(m.rows(), std::vector<Point>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

PointMatrix from_point_rows(const std::vector<std::vector<Point>>& rows) {
  PointMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged point matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Elliptic-curve ElGamal with generalized Fibonacci key matrices";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<Error>(m, "FibeccError", PyExc_ValueError);
  py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
  py::register_exception<NotInvertible>(m, "NotInvertible", base.ptr());
  py::register_exception<NotPrimitive>(m, "NotPrimitive", base.ptr());
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<SingularCurve>(m, "SingularCurve", base.ptr());
  py::register_exception<PointNotOnCurve>(m, "PointNotOnCurve", base.ptr());
  py::register_exception<CurveTooLarge>(m, "CurveTooLarge", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<UnknownSymbol>(m, "UnknownSymbol", base.ptr());
  py::register_exception<UnknownPoint>(m, "UnknownPoint", base.ptr());
  py::register_exception<LengthOverflow>(m, "LengthOverflow", base.ptr());
  py::register_exception<SubgroupMismatch>(m, "SubgroupMismatch", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  // Field arithmetic.
  m.def("mod_pow", [](std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    return mod_pow(FieldElement(b, PrimeModulus(p)), e).value();
  }, py::arg("base"), py::arg("exponent"), py::arg("p"));
  m.def("mod_inverse", &mod_inverse, py::arg("a"), py::arg("m"));
  m.def("is_prime", &is_prime);
  m.def("is_primitive_element", [](std::uint64_t beta, std::uint64_t p) {
    return is_primitive_element(FieldElement(beta, PrimeModulus(p)));
  }, py::arg("beta"), py::arg("p"));
  m.def("find_primitive_element", [](std::uint64_t p) {
    return find_primitive_element(PrimeModulus(p)).value();
  }, py::arg("p"));

  // Curves.
  py::class_<CurveParams>(m, "CurveParams")
      .def(py::init<std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("p"), py::arg("a"),
           py::arg("b"))
      .def_property_readonly("p", &CurveParams::p)
      .def_property_readonly("a", &CurveParams::a)
      .def_property_readonly("b", &CurveParams::b)
      .def("__eq__", [](const CurveParams& l, const CurveParams& r) { return l == r; })
      .def("__repr__", [](const CurveParams& c) { return "CurveParams(" + format_curve(c) + ")"; });

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("x"), py::arg("y"))
      .def_static("infinity", &Point::infinity)
      .def_static("parse", &parse_point)
      .def_property_readonly("is_infinity", &Point::is_infinity)
      .def_property_readonly("x", &Point::x)
      .def_property_readonly("y", &Point::y)
      .def("__eq__", [](const Point& l, const Point& r) { return l == r; })
      .def("__lt__", [](const Point& l, const Point& r) { return l < r; })
      .def("__hash__", [](const Point& p) {
        return p.is_infinity() ? py::hash(py::none())
                               : py::hash(py::make_tuple(p.x(), p.y()));
      })
      .def("__str__", &format_point)
      .def("__repr__", [](const Point& p) { return "Point" + std::string(p.is_infinity() ? "(O)" : format_point(p)); });

  m.def("is_on_curve", &is_on_curve);
  m.def("negate", &negate);
  m.def("add", &add);
  m.def("scalar_mul", &scalar_mul, py::arg("curve"), py::arg("multiple"), py::arg("point"));
  m.def("enumerate_points", &enumerate_points, py::arg("curve"),
        py::arg("limit") = kDefaultEnumerationLimit);
  m.def("order_of_point", &order_of_point);

  // Multinacci sequence and key matrices.
  m.def("term", [](std::size_t n, std::uint64_t mod, std::int64_t k) {
    return term(MultinacciParams(n, mod), k);
  }, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("power_matrix", [](std::size_t n, std::uint64_t mod, std::int64_t k) {
    return to_rows(power_matrix(MultinacciParams(n, mod), k).entries());
  }, py::arg("n"), py::arg("m"), py::arg("k"));
  m.def("det_sign", &det_sign, py::arg("n"), py::arg("k"));
  m.def("mat_mul_mod", [](const std::vector<std::vector<std::uint64_t>>& a,
                          const std::vector<std::vector<std::uint64_t>>& b, std::uint64_t mod) {
    return to_rows(mat_mul_mod(from_rows(a), from_rows(b), mod));
  });

  // Alphabet and block packing.
  py::class_<AlphabetMap>(m, "AlphabetMap")
      .def_property_readonly("curve", &AlphabetMap::curve)
      .def("point_of", &AlphabetMap::point_of)
      .def("symbol_of", &AlphabetMap::symbol_of)
      .def("__len__", &AlphabetMap::size)
      .def("pairs", &AlphabetMap::pairs)
      .def("to_text", [](const AlphabetMap& map) {
        std::ostringstream out;
        write_alphabet(out, map);
        return out.str();
      });
  m.def("paper_alphabet", &paper_alphabet);
  m.def("paper_curve", &paper_curve);
  m.def("derive_alphabet", &derive_alphabet, py::arg("curve"), py::arg("charset"));
  m.def("default_alphabet", &default_alphabet);
  m.def("encode", &encode);
  m.def("decode", &decode);
  m.def("pack_blocks", [](const std::vector<Point>& pts, std::size_t n) {
    std::vector<std::vector<std::vector<Point>>> out;
    for (const auto& block : pack_blocks(pts, n)) out.push_back(to_rows(block));
    return out;
  });

  // Scheme.
  py::class_<SchemeParams>(m, "SchemeParams")
      .def(py::init<CurveParams, Point>(), py::arg("curve"), py::arg("base_point"))
      .def_property_readonly("curve", &SchemeParams::curve)
      .def_property_readonly("base_point", &SchemeParams::base_point)
      .def_property_readonly("order", &SchemeParams::order);

  py::class_<PublicKey>(m, "PublicKey")
      .def_readonly("params", &PublicKey::params)
      .def_property_readonly("beta", [](const PublicKey& k) { return k.beta.value(); })
      .def_property_readonly("e1", [](const PublicKey& k) { return k.e1.value(); })
      .def_readonly("n", &PublicKey::n)
      .def("to_text", [](const PublicKey& k) {
        std::ostringstream out;
        write_public_key(out, k);
        return out.str();
      });
  py::class_<PrivateKey>(m, "PrivateKey").def_readonly("r", &PrivateKey::r);

  py::class_<CiphertextBundle>(m, "CiphertextBundle")
      .def_readonly("a_value", &CiphertextBundle::a_value)
      .def_readonly("n", &CiphertextBundle::n)
      .def_readonly("original_length", &CiphertextBundle::original_length)
      .def_property_readonly("blocks", [](const CiphertextBundle& b) {
        std::vector<std::vector<std::vector<Point>>> out;
        for (const auto& block : b.blocks) out.push_back(to_rows(block));
        return out;
      })
      .def("to_text", [](const CiphertextBundle& b) {
        std::ostringstream out;
        write_ciphertext(out, b);
        return out.str();
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_ciphertext(in);
      });

  m.def("gen_keypair", &gen_keypair, py::arg("params"), py::arg("beta"), py::arg("r"),
        py::arg("n") = 2);
  m.def("derive_shared_encrypt", [](const PublicKey& pub, std::uint64_t e) {
    const auto [a, k] = derive_shared_encrypt(pub, EphemeralKey{e});
    return py::make_tuple(a, k.k);
  }, py::arg("pub"), py::arg("e"));
  m.def("derive_shared_decrypt", [](std::uint64_t a, const PrivateKey& priv, std::uint64_t p) {
    return derive_shared_decrypt(a, priv, PrimeModulus(p)).k;
  }, py::arg("a_value"), py::arg("priv"), py::arg("p"));
  m.def("key_matrix", [](std::size_t n, std::uint64_t k, std::uint64_t order) {
    return to_rows(key_matrix(n, SharedSecret{k}, order).entries());
  }, py::arg("n"), py::arg("k"), py::arg("order"));
  m.def("decryption_matrix", [](std::size_t n, std::uint64_t k, std::uint64_t order) {
    return to_rows(decryption_matrix(n, SharedSecret{k}, order).entries());
  }, py::arg("n"), py::arg("k"), py::arg("order"));
  m.def("mat_point_mul", [](const CurveParams& curve,
                            const std::vector<std::vector<std::uint64_t>>& mat,
                            const std::vector<std::vector<Point>>& block) {
    return to_rows(mat_point_mul(curve, from_rows(mat), from_point_rows(block)));
  });
  m.def("encrypt_message", [](const PublicKey& pub, std::uint64_t e, const std::string& text,
                              const AlphabetMap& map) {
    return encrypt_message(pub, EphemeralKey{e}, text, map);
  }, py::arg("pub"), py::arg("e"), py::arg("text"), py::arg("alphabet"));
  m.def("decrypt_message", &decrypt_message, py::arg("priv"), py::arg("params"),
        py::arg("bundle"), py::arg("alphabet"));
  m.def("ciphertext_symbols", &ciphertext_symbols);

  // Key-space analysis.
  m.def("gl_order", [](std::size_t n, std::uint64_t p) { return to_pyint(gl_order(n, p)); },
        py::arg("n"), py::arg("p"));
  m.def("retrieval_probability", [](std::size_t n, std::uint64_t p) {
    const auto prob = retrieval_probability(n, p);
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return py::make_tuple(fraction(to_pyint(boost::multiprecision::numerator(prob.exact)),
                                   to_pyint(boost::multiprecision::denominator(prob.exact))),
                          prob.decimal);
  }, py::arg("n"), py::arg("p"));
  m.def("build_tables", [](const std::vector<std::uint64_t>& primes,
                           const std::vector<std::size_t>& dims) {
    py::list rows;
    for (const auto& r : build_tables(primes, dims)) {
      py::dict row;
      row["p"] = r.p;
      row["n"] = r.n;
      row["gl_order"] = to_pyint(r.gl_order);
      row["gl_order_decimal"] = r.gl_order_decimal;
      row["probability_decimal"] = r.probability_decimal;
      rows.append(row);
    }
    return rows;
  }, py::arg("primes"), py::arg("dims"));
}
