#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goodred/jsonio.hpp"

namespace py = pybind11;
using namespace goodred;

namespace pybind11::detail {

/* mpz_class <-> python int through decimal strings */
template <> struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = mpz_class(py::str(src).cast<std::string>());
        return true;
    }
    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

SPrimeSet sset(const std::vector<Int>& primes) {
    return SPrimeSet(primes);
}

GL2ZS matrix_from(const std::vector<std::string>& entries,
                  const std::vector<Int>& s) {
    if (entries.size() != 4)
        throw std::domain_error("matrix needs 4 entries");
    auto rat = [](const std::string& t) {
        Rat r(t);
        r.canonicalize();
        return r;
    };
    return {rat(entries[0]), rat(entries[1]), rat(entries[2]),
            rat(entries[3]), sset(s)};
}

BinaryForm form_from(const std::vector<Int>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    return BinaryForm(deg, coeffs);
}

py::object json_to_py(const json& j) {
    auto m = py::module_::import("json");
    return m.attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for point configurations on P^1 with good "
              "reduction outside S";
    m.attr("__version__") = "0.1.0";

    py::register_exception<capacity_error>(m, "CapacityError",
                                           PyExc_RuntimeError);

    // ---- S-arithmetic
    m.def("is_prime", [](const Int& n) { return is_prime(n); });
    m.def(
        "factorize",
        [](const Int& n) {
            auto f = factorize(n);
            py::list factors;
            for (const auto& [p, e] : f.factors)
                factors.append(py::make_tuple(p, e));
            return py::make_tuple(f.sign, factors);
        },
        "exact factorization as (sign, [(p, e), ...])");
    m.def("valuation",
          [](const Int& num, const Int& den, const Int& p) {
              Rat x(num, den);
              x.canonicalize();
              return valuation(x, p);
          },
          py::arg("num"), py::arg("den"), py::arg("p"));
    m.def("is_s_unit",
          [](const Int& num, const Int& den, const std::vector<Int>& s) {
              Rat x(num, den);
              x.canonicalize();
              return is_s_unit(x, sset(s));
          });
    m.def("s_part_split", [](const Int& n, const std::vector<Int>& s) {
        auto [sp, cp] = s_part_split(n, sset(s));
        return py::make_tuple(sp, cp);
    });

    // ---- projective configurations (points as "a:b" strings)
    m.def("normalize_point", [](const std::string& pt) {
        return ProjPoint::parse(pt).str();
    });
    m.def("cross_det", [](const std::string& p, const std::string& q) {
        return cross_det(ProjPoint::parse(p), ProjPoint::parse(q));
    });
    m.def("reduce_point", [](const std::string& pt, const Int& p) {
        return reduce_point(ProjPoint::parse(pt), p).str();
    });
    m.def("omega_member",
          [](const std::string& config, const std::vector<Int>& s) {
              return omega_member(PointConfig::parse(config), sset(s));
          });
    m.def("colliding_primes", [](const std::string& config) {
        auto bad = colliding_primes(PointConfig::parse(config));
        return std::vector<Int>(bad.begin(), bad.end());
    });
    m.def("apply_gl2",
          [](const std::vector<std::string>& gamma,
             const std::string& config, const std::vector<Int>& s) {
              auto out = apply_gl2(matrix_from(gamma, s),
                                   PointConfig::parse(config));
              return out.str();
          },
          py::arg("gamma"), py::arg("config"),
          py::arg("s") = std::vector<Int>{});

    // ---- binary forms (coefficient lists a_n..a_0)
    m.def("discriminant", [](const std::vector<Int>& f) {
        return discriminant(form_from(f));
    });
    m.def("act",
          [](const std::vector<std::string>& gamma, const std::vector<Int>& f,
             const std::vector<Int>& s) {
              return act(matrix_from(gamma, s), form_from(f)).coeffs();
          },
          py::arg("gamma"), py::arg("f"), py::arg("s") = std::vector<Int>{});
    m.def("roots_config", [](const std::vector<Int>& f) {
        std::vector<std::string> pts;
        for (const auto& p : roots_config(form_from(f)))
            pts.push_back(p.str());
        return pts;
    });
    m.def("config_to_form", [](const std::vector<std::string>& pts) {
        std::vector<ProjPoint> v;
        for (const auto& p : pts)
            v.push_back(ProjPoint::parse(p));
        return config_to_form(PointConfig(std::move(v))).coeffs();
    });
    m.def("is_omega_form",
          [](const std::vector<Int>& f, const std::vector<Int>& s) {
              return is_omega_form(form_from(f), sset(s));
          });
    m.def("reduce_form_mod_p",
          [](const std::vector<Int>& f, const Int& p) {
              return json_to_py(to_json(reduce_form_mod_p(form_from(f), p)));
          });
    m.def("equivalent",
          [](const std::vector<Int>& f, const std::vector<Int>& g,
             const std::vector<Int>& s, unsigned bound) -> py::object {
              auto w = equivalent(form_from(f), form_from(g), sset(s), bound);
              if (!w)
                  return py::none();
              py::dict d;
              d["gamma"] = std::vector<std::string>{
                  w->gamma.m11().get_str(), w->gamma.m12().get_str(),
                  w->gamma.m21().get_str(), w->gamma.m22().get_str()};
              d["lambda"] = w->lambda.get_str();
              return d;
          },
          py::arg("f"), py::arg("g"), py::arg("s") = std::vector<Int>{},
          py::arg("bound") = 3);
    m.def("gauss_reduce", [](const std::vector<Int>& f) {
        return gauss_reduce_quadratic(form_from(f)).coeffs();
    });
    m.def("enumerate_omega_forms",
          [](int degree, const std::vector<Int>& s, long height) {
              std::vector<std::vector<Int>> out;
              for (const auto& f : enumerate_omega_forms(degree, sset(s),
                                                         height))
                  out.push_back(f.coeffs());
              return out;
          },
          py::arg("degree"), py::arg("s"), py::arg("height"));
    m.def("orbit_partition",
          [](const std::vector<std::vector<Int>>& forms,
             const std::vector<Int>& s, unsigned bound) {
              std::vector<BinaryForm> fs;
              for (const auto& f : forms)
                  fs.push_back(form_from(f));
              return orbit_partition(fs, sset(s), bound);
          },
          py::arg("forms"), py::arg("s") = std::vector<Int>{},
          py::arg("bound") = 3);
    m.def("field_disc_quadratic", [](const std::vector<Int>& f) {
        return field_disc_quadratic(form_from(f));
    });

    // ---- cohomology
    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def(py::init<std::vector<std::vector<int>>>())
        .def_static("cyclic", &FiniteGroup::cyclic)
        .def_static("dihedral", &FiniteGroup::dihedral)
        .def_static("direct_product", &FiniteGroup::direct_product)
        .def("order", &FiniteGroup::order)
        .def("op", &FiniteGroup::op)
        .def("inv", &FiniteGroup::inv)
        .def("is_abelian", &FiniteGroup::is_abelian)
        .def("table", &FiniteGroup::table);

    py::class_<GGroup>(m, "GGroup")
        .def(py::init<FiniteGroup, FiniteGroup,
                      std::vector<std::vector<int>>>())
        .def_static("trivial_action", &GGroup::trivial_action)
        .def_static("cyclic_on_cyclic", &GGroup::cyclic_on_cyclic)
        .def("act", &GGroup::act);

    m.def("h0", [](const GGroup& g) { return h0(g); });
    m.def("cocycle_count",
          [](const GGroup& g) { return cocycles(g).size(); });
    m.def("h1_classes", [](const GGroup& g) {
        auto h = h1_finite(g);
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& cls : h.classes) {
            std::vector<std::vector<int>> c;
            for (auto idx : cls)
                c.push_back(h.cocycles[idx].values);
            out.push_back(std::move(c));
        }
        return out;
    });
    m.def("h1_size", [](const GGroup& g) { return h1_finite(g).size(); });
    m.def("h1_zr_cyclic",
          [](int n, const std::vector<std::vector<Int>>& generator) {
              int rank = static_cast<int>(generator.size());
              std::vector<ZMat> rho(n);
              rho[0] = zmat_identity(rank);
              for (int i = 1; i < n; ++i)
                  rho[i] = zmat_mul(rho[i - 1], generator);
              auto res = h1_zr(ZrModule(FiniteGroup::cyclic(n), rank,
                                        std::move(rho)));
              return res.divisors;
          },
          "elementary divisors of H^1(Z/n, Z^r) for the cyclic action "
          "generated by the given matrix");

    // ---- descent model
    m.def("descent_report",
          [](int n, unsigned q, unsigned k) {
              if (!is_prime(Int(static_cast<long>(q))))
                  throw std::domain_error("q must be prime in this model");
              FqField f(q, k);
              return json_to_py(to_json(f, orbit_fiber_report(f, n)));
          },
          py::arg("n"), py::arg("q"), py::arg("k"));
    m.def("h1_pgl2_check", [](unsigned q, unsigned k) {
        return h1_pgl2_check(FqField(q, k));
    });
    m.def("stabilizer_order",
          [](const std::vector<uint32_t>& points, unsigned q, unsigned k) {
              FqField f(q, k);
              FqConfig c{points};
              std::sort(c.points.begin(), c.points.end());
              return stabilizer(f, c).order();
          },
          "order of M_A for the configuration given by point indices "
          "(q^k is [0:1], i < q^k is [1:elem_i])");
    m.def("stable_config_count", [](int n, unsigned q, unsigned k) {
        FqField f(q, k);
        return frobenius_orbits(f, n).size();
    });
}
