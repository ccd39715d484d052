#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqlc/factor.hpp"
#include "fqlc/fields.hpp"
#include "fqlc/frobenius.hpp"
#include "fqlc/sequences.hpp"
#include "fqlc/subfield.hpp"
#include "fqlc/textio.hpp"

namespace py = pybind11;
using namespace fqlc;

namespace {

using MutableTowerPtr = std::shared_ptr<FieldTower>;

MutableTowerPtr unconst(TowerPtr tower) { return std::const_pointer_cast<FieldTower>(tower); }

Level parse_level(const FieldTower& tower, const std::string& name) {
    if (name == "base") return Level::Base;
    if (name == "ext") return Level::Ext;
    if (name == "top") return tower.top_level();
    raise(ErrorCode::BadInput, "level must be 'base', 'ext' or 'top'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-field tower algebra: minimal polynomials and linear complexity over subfields";

    py::register_exception<Error>(m, "Error");

    py::enum_<Level>(m, "Level")
        .value("BASE", Level::Base)
        .value("EXT", Level::Ext);

    py::class_<FieldTower, MutableTowerPtr>(m, "Tower")
        .def_static(
            "build",
            [](std::uint64_t p, const std::optional<std::string>& base_poly,
               const std::optional<std::string>& ext_poly) { return unconst(build_tower_text(p, base_poly, ext_poly)); },
            py::arg("p"), py::arg("base_poly") = std::nullopt, py::arg("ext_poly") = std::nullopt,
            "Build F_p <= F_q <= F_{q^m}; moduli are written in t over F_p and a over F_q.")
        .def_property_readonly("p", &FieldTower::characteristic)
        .def_property_readonly("q", &FieldTower::base_size)
        .def_property_readonly("Q", &FieldTower::ext_size)
        .def_property_readonly("d", &FieldTower::base_degree)
        .def_property_readonly("m", &FieldTower::ext_degree)
        .def_property_readonly("base_modulus", [](const FieldTower& t) {
            return describe_base_modulus(t.shared_from_this());
        })
        .def_property_readonly("ext_modulus", [](const FieldTower& t) {
            return describe_ext_modulus(t.shared_from_this());
        })
        .def("element",
             [](const FieldTower& t, const std::string& text, const std::string& level) {
                 return parse_element(text, t.shared_from_this(), parse_level(t, level));
             },
             py::arg("text"), py::arg("level") = "top")
        .def("poly",
             [](const FieldTower& t, const std::string& text, const std::string& level) {
                 return parse_poly(text, t.shared_from_this(), parse_level(t, level));
             },
             py::arg("text"), py::arg("level") = "top")
        .def("sequence",
             [](const FieldTower& t, const std::string& text, const std::string& level) {
                 return parse_sequence(text, t.shared_from_this(), parse_level(t, level));
             },
             py::arg("text"), py::arg("level") = "top")
        .def("zero", [](const FieldTower& t, const std::string& level) { return t.zero(parse_level(t, level)); },
             py::arg("level") = "top")
        .def("one", [](const FieldTower& t, const std::string& level) { return t.one(parse_level(t, level)); },
             py::arg("level") = "top")
        .def("generator",
             [](const FieldTower& t, const std::string& level) { return t.generator(parse_level(t, level)); },
             py::arg("level") = "top")
        .def("from_encoding",
             [](const FieldTower& t, const std::string& level, std::uint64_t code) {
                 return t.from_encoding(parse_level(t, level), code);
             },
             py::arg("level"), py::arg("code"))
        .def("elements",
             [](const FieldTower& t, const std::string& level) {
                 return enumerate_elements(t.shared_from_this(), parse_level(t, level));
             },
             py::arg("level") = "top")
        .def("default_modulus",
             [](const FieldTower& t, const std::string& level, int degree) {
                 return default_modulus(t.shared_from_this(), parse_level(t, level), degree);
             },
             py::arg("level"), py::arg("degree"))
        .def("__repr__", [](const FieldTower& t) {
            std::string out = "Tower(p=" + std::to_string(t.characteristic());
            if (auto b = describe_base_modulus(t.shared_from_this())) out += ", base=" + *b;
            if (auto e = describe_ext_modulus(t.shared_from_this())) out += ", ext=" + *e;
            return out + ")";
        });

    py::class_<FieldElement>(m, "Element")
        .def_property_readonly("level", &FieldElement::level)
        .def_property_readonly("encoding", &FieldElement::encoding)
        .def("is_zero", &FieldElement::is_zero)
        .def("is_one", &FieldElement::is_one)
        .def("coeffs", &FieldElement::coeffs)
        .def("inv", &FieldElement::inv)
        .def("__pow__", [](const FieldElement& x, std::uint64_t n) { return x.pow(n); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__lt__", [](const FieldElement& x, const FieldElement& y) { return x < y; })
        .def("__hash__", [](const FieldElement& x) { return x.encoding(); })
        .def("__str__", [](const FieldElement& x) { return format_element(x); })
        .def("__repr__", [](const FieldElement& x) { return "Element(" + format_element(x) + ")"; });

    py::class_<Poly>(m, "Poly")
        .def_property_readonly("level", &Poly::level)
        .def("is_zero", &Poly::is_zero)
        .def("degree", &Poly::degree)
        .def("coeffs", &Poly::coeffs)
        .def("coeff", &Poly::coeff)
        .def("leading", &Poly::leading)
        .def("is_monic", &Poly::is_monic)
        .def("__pow__", [](const Poly& f, std::uint64_t n) { return f.pow(n); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__floordiv__", [](const Poly& f, const Poly& g) { return f / g; })
        .def("__mod__", [](const Poly& f, const Poly& g) { return f % g; })
        .def("__lt__", &poly_less)
        .def("__str__", [](const Poly& f) { return format_poly(f); })
        .def("__repr__", [](const Poly& f) { return "Poly(" + format_poly(f) + ")"; });

    m.def("divrem", &divrem);
    m.def("gcd", &gcd);
    m.def("lcm", &lcm);
    m.def("derivative", &derivative);
    m.def("powmod", &powmod);
    m.def("eval", [](const Poly& f, const FieldElement& x) { return eval(f, x); });
    m.def("make_monic", &make_monic);
    m.def("frobenius_q", &frobenius_q);
    m.def("embed", py::overload_cast<const FieldElement&>(&embed));
    m.def("project", py::overload_cast<const FieldElement&>(&project));
    m.def("embed_poly", py::overload_cast<const Poly&>(&embed));
    m.def("project_poly", py::overload_cast<const Poly&>(&project));

    py::class_<Factorization>(m, "Factorization")
        .def_readonly("unit", &Factorization::unit)
        .def_readonly("factors", &Factorization::factors)
        .def("expand", &Factorization::expand)
        .def("__str__", [](const Factorization& fz) { return format_factorization(fz); })
        .def("__repr__", [](const Factorization& fz) { return "Factorization(" + format_factorization(fz) + ")"; });

    m.def("squarefree_decomposition", &squarefree_decomposition);
    m.def("distinct_degree_split", &distinct_degree_split);
    m.def("equal_degree_split", &equal_degree_split, py::arg("f"), py::arg("d"), py::arg("rng_seed") = 0);
    m.def("factor_canonical", &factor_canonical);
    m.def("is_irreducible", &is_irreducible);

    py::class_<SigmaOrbit>(m, "SigmaOrbit")
        .def_readonly("representative", &SigmaOrbit::representative)
        .def_readonly("members", &SigmaOrbit::members)
        .def_readonly("k", &SigmaOrbit::k);

    py::class_<SigmaClass>(m, "SigmaClass")
        .def_readonly("orbit", &SigmaClass::orbit)
        .def_readonly("present", &SigmaClass::present);

    py::class_<SigmaClassPartition>(m, "SigmaClassPartition")
        .def_readonly("classes", &SigmaClassPartition::classes);

    m.def("sigma", &sigma);
    m.def("sigma_iter", &sigma_iter);
    m.def("orbit_order", &orbit_order);
    m.def("orbit", &orbit);
    m.def("orbit_product", &orbit_product);
    m.def("partition_classes", &partition_classes);
    m.def("factor_over_extension", &factor_over_extension);

    py::class_<ClassRow>(m, "ClassRow")
        .def_readonly("representative", &ClassRow::representative)
        .def_readonly("k", &ClassRow::k)
        .def_readonly("deg", &ClassRow::deg)
        .def_readonly("members", &ClassRow::members)
        .def_readonly("exponents", &ClassRow::exponents)
        .def_readonly("e", &ClassRow::e)
        .def_readonly("orbit_prod", &ClassRow::orbit_prod);

    py::class_<SubfieldResult>(m, "SubfieldResult")
        .def_readonly("H", &SubfieldResult::H)
        .def_readonly("L", &SubfieldResult::L)
        .def_readonly("classes", &SubfieldResult::classes);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("bound", &BoundReport::bound)
        .def_readonly("tight", &BoundReport::tight)
        .def_readonly("witness", &BoundReport::witness);

    m.def("min_poly_over_base", &min_poly_over_base);
    m.def("linear_complexity_over_base", &linear_complexity_over_base);
    m.def("admissible_h", &admissible_h);
    m.def("enumerate_admissible_h", &enumerate_admissible_h, py::arg("f"), py::arg("cap") = 1000000);
    m.def("mo_lower_bound", &mo_lower_bound);
    m.def("bound_tightness", &bound_tightness);

    py::class_<Sequence>(m, "Sequence")
        .def_property_readonly("level", &Sequence::level)
        .def("terms", &Sequence::terms)
        .def("__len__", &Sequence::size)
        .def("__getitem__", [](const Sequence& s, std::size_t i) {
            if (i >= s.size()) throw py::index_error();
            return s[i];
        })
        .def(py::self == py::self)
        .def("__str__", [](const Sequence& s) { return format_sequence(s); })
        .def("__repr__", [](const Sequence& s) { return "Sequence(" + format_sequence(s) + ")"; });

    py::class_<MultiSequence>(m, "MultiSequence")
        .def_readonly("components", &MultiSequence::components);

    m.def("lfsr_generate", &lfsr_generate);
    m.def("berlekamp_massey", &berlekamp_massey);
    m.def("decompose_to_base", &decompose_to_base);
    m.def("joint_min_poly", &joint_min_poly);
    m.def("decompose_by_coprime_factors", &decompose_by_coprime_factors);

    py::class_<VerifyMismatch>(m, "VerifyMismatch")
        .def_readonly("trial", &VerifyMismatch::trial)
        .def_readonly("measured_h", &VerifyMismatch::measured_h)
        .def_readonly("theory_H", &VerifyMismatch::theory_H)
        .def_readonly("oracle_H", &VerifyMismatch::oracle_H);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("trials", &VerifyReport::trials)
        .def_readonly("minpoly_exact_matches", &VerifyReport::minpoly_exact_matches)
        .def_readonly("mismatches", &VerifyReport::mismatches)
        .def("ok", &VerifyReport::ok)
        .def("match_fraction", &VerifyReport::match_fraction);

    m.def("verify_subfield_minpoly", &verify_subfield_minpoly, py::arg("h"), py::arg("trials") = 20,
          py::arg("seed") = 0);

    m.def("format_element", &format_element);
    m.def("format_poly", py::overload_cast<const Poly&>(&format_poly));
    m.def("format_sequence", &format_sequence);
    m.def("format_factorization", &format_factorization);
}
