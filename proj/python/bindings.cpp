#include "arfcalc/arfinv.hpp"
#include "arfcalc/oracle.hpp"
#include "arfcalc/witt.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace arfcalc;

namespace {

// exact conversion through decimal strings so coefficients are not
// clamped to machine integers
Int int_from_py(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::int_ int_to_py(const Int& v) {
    return py::int_(py::str(v.str()));
}

IntPoly poly_from_py(const py::sequence& seq) {
    IntPoly p;
    p.c.reserve(seq.size());
    for (const auto& h : seq) p.c.push_back(int_from_py(h));
    p.normalize();
    return p;
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& v : p.c) out.append(int_to_py(v));
    return out;
}

ResPoly respoly_from_py(const py::sequence& seq, int modulus) {
    ResPoly p(modulus);
    for (const auto& h : seq) p.c.push_back(h.cast<int>());
    p.normalize();
    return p;
}

py::list respoly_to_py(const ResPoly& p) {
    py::list out;
    for (int v : p.c) out.append(v);
    return out;
}

Mat mat_from_py(const py::sequence& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(py::sequence(rows[0]).size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        py::sequence row(rows[i]);
        if (static_cast<int>(row.size()) != c) throw py::value_error("ragged matrix");
        for (int j = 0; j < c; ++j) m.at(i, j) = poly_from_py(py::sequence(row[j]));
    }
    return m;
}

py::list mat_to_py(const Mat& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(poly_to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

IntSymForm intmat_from_py(const py::sequence& rows) {
    IntSymForm f(static_cast<int>(rows.size()));
    for (int i = 0; i < f.n; ++i) {
        py::sequence row(rows[i]);
        if (static_cast<int>(row.size()) != f.n) throw py::value_error("matrix must be square");
        for (int j = 0; j < f.n; ++j) f.at(i, j) = int_from_py(row[j]);
    }
    return f;
}

GF2Form gf2_from_py(const py::sequence& rows) {
    GF2Form f(static_cast<int>(rows.size()));
    for (int i = 0; i < f.n; ++i) {
        py::sequence row(rows[i]);
        for (int j = 0; j < f.n; ++j) f.set(i, j, row[j].cast<int>() & 1);
    }
    return f;
}

py::dict q0_to_py(const Q0ClassZx& c) {
    py::dict d;
    d["group"] = "q0zx";
    d["s"] = c.s;
    d["t"] = respoly_to_py(c.t);
    d["u1"] = respoly_to_py(c.u1);
    d["u2"] = respoly_to_py(c.u2);
    d["u3"] = respoly_to_py(c.u3);
    return d;
}

py::dict q3_to_py(const Q3ClassZx& c) {
    py::dict d;
    d["group"] = "q3zx";
    d["value"] = respoly_to_py(c.value);
    return d;
}

py::dict dyadic_to_py(const Dyadic& d) {
    py::dict out;
    out["num"] = poly_to_py(d.num);
    out["denom_exp"] = d.k;
    return out;
}

LinkingResolution res_from_py(const py::sequence& d, const py::sequence& delta,
                              const py::sequence& phi) {
    return {mat_from_py(d), mat_from_py(delta), mat_from_py(phi)};
}

std::vector<IntPoly> vec_from_py(const py::sequence& seq) {
    std::vector<IntPoly> v;
    for (const auto& h : seq) v.push_back(poly_from_py(py::sequence(h)));
    return v;
}

} // namespace

PYBIND11_MODULE(_arfcalc, m) {
    m.doc() = "exact Arf invariants in algebraic L-theory over Z and Z[x]";

    m.def("poly_add", [](py::sequence a, py::sequence b) {
        return poly_to_py(poly_add(poly_from_py(a), poly_from_py(b)));
    });
    m.def("poly_mul", [](py::sequence a, py::sequence b) {
        return poly_to_py(poly_mul(poly_from_py(a), poly_from_py(b)));
    });
    m.def("tate_decompose", [](py::sequence a) {
        auto [p, q] = tate_decompose(respoly_from_py(a, 2));
        return py::make_tuple(respoly_to_py(p), respoly_to_py(q));
    });
    m.def("tate_compose", [](py::sequence p, py::sequence q) {
        return respoly_to_py(tate_compose(respoly_from_py(p, 2), respoly_from_py(q, 2)));
    });

    m.def("reduce_q0_zx", [](py::sequence rows) { return q0_to_py(reduce_q0_Zx(mat_from_py(rows))); });
    m.def("reduce_q3_zx", [](py::sequence rows) { return q3_to_py(reduce_q3_Zx(mat_from_py(rows))); });
    m.def("reduce_q1_zx", [](py::sequence rows) { return reduce_q1_Zx(mat_from_py(rows)); });
    m.def("reduce_qn_z", [](int n, py::int_ a) { return reduce_qn_Z(n, int_from_py(a)).value; });

    m.def(
        "classical_arf",
        [](py::sequence psi, std::optional<py::sequence> lagrangian) {
            GF2Form f = gf2_from_py(psi);
            std::vector<uint32_t> e, estar;
            if (lagrangian) {
                for (const auto& row : *lagrangian) {
                    uint32_t v = 0;
                    py::sequence r(row);
                    for (std::size_t i = 0; i < r.size(); ++i)
                        if (r[i].cast<int>() & 1) v |= 1u << i;
                    e.push_back(v);
                }
                estar = symplectic_complete(f, e);
            } else {
                std::tie(e, estar) = symplectic_basis(f);
            }
            return classical_arf(f, e, estar);
        },
        py::arg("psi"), py::arg("lagrangian") = std::nullopt);
    m.def("arf_democratic", [](py::sequence psi) { return oracle::arf_democratic(gf2_from_py(psi)); });

    m.def("generalized_arf", [](int epsilon, py::sequence psi, py::sequence inclusion,
                                py::sequence complement) {
        EpsForm f{epsilon, mat_from_py(psi)};
        LagrangianWitness w{mat_from_py(inclusion), mat_from_py(complement)};
        return q3_to_py(generalized_arf_form(f, w));
    });
    m.def("linking_arf", [](py::sequence d, py::sequence delta, py::sequence phi, py::sequence mu) {
        LinkingResolution res = res_from_py(d, delta, phi);
        std::vector<ResPoly> mv;
        for (const auto& h : mu) mv.push_back(respoly_from_py(py::sequence(h), 2));
        return q0_to_py(linking_arf(res, mv));
    });
    m.def("canonical_order2_form", [](py::sequence mrows) {
        Order2Form o = canonical_order2_form(mat_from_py(mrows), xmatrix(RingTag::Zx));
        py::dict out;
        out["d"] = mat_to_py(o.res.d);
        out["delta"] = mat_to_py(o.res.delta);
        out["phi"] = mat_to_py(o.res.phi);
        py::list mv;
        for (const auto& v : o.mu_values) mv.append(respoly_to_py(v));
        out["mu"] = mv;
        return out;
    });

    m.def("eval_lambda", [](py::sequence d, py::sequence delta, py::sequence phi, py::sequence x1,
                            py::sequence x0, py::sequence y1, py::sequence y0) {
        return dyadic_to_py(eval_lambda(res_from_py(d, delta, phi), vec_from_py(x1), vec_from_py(x0),
                                        vec_from_py(y1), vec_from_py(y0)));
    });
    m.def("eval_mu", [](py::sequence d, py::sequence delta, py::sequence phi, py::sequence x1,
                        py::sequence x0) {
        return dyadic_to_py(eval_mu(res_from_py(d, delta, phi), vec_from_py(x1), vec_from_py(x0)));
    });

    m.def("signature", [](py::sequence rows) { return signature(intmat_from_py(rows)); });
    m.def("signature_mod8", [](py::sequence rows) { return signature_mod8(intmat_from_py(rows)); });
    m.def("characteristic_element", [](py::sequence rows) {
        py::list out;
        for (const auto& v : characteristic_element(intmat_from_py(rows))) out.append(int_to_py(v));
        return out;
    });
    m.def("e8", [] {
        IntSymForm f = e8_form();
        py::list rows;
        for (int i = 0; i < f.n; ++i) {
            py::list row;
            for (int j = 0; j < f.n; ++j) row.append(int_to_py(f.at(i, j)));
            rows.append(row);
        }
        return rows;
    });

    m.def("boundary_q3_to_l2", [](py::sequence mrows, const std::string& ring) {
        RingTag tag = ring == "z" ? RingTag::Z : RingTag::Zx;
        EpsForm f = boundary_q3_to_L2(mat_from_py(mrows), xmatrix(tag));
        py::dict out;
        out["epsilon"] = f.epsilon;
        out["psi"] = mat_to_py(f.psi);
        return out;
    });

    m.def("lgroups_table", [](const std::string& ring) {
        auto t = lgroups_table(ring == "z" ? RingTag::Z : RingTag::Zx);
        return std::vector<std::string>(t.begin(), t.end());
    });
    m.def("unil_table", [] {
        auto t = unil_table();
        return std::vector<std::string>(t.begin(), t.end());
    });

    m.def(
        "verify_reduction",
        [](const std::string& group, long long trials, uint64_t seed) {
            oracle::Report r = oracle::verify_reduction(oracle::qgroup_from_string(group), trials, seed);
            py::dict out;
            out["suite"] = r.suite;
            out["seed"] = r.seed;
            out["trials"] = r.trials;
            out["failures"] = r.failures;
            out["passed"] = r.passed();
            out["counterexample"] = r.counterexample;
            return out;
        },
        py::arg("group"), py::arg("trials") = 200, py::arg("seed") = 7);

    py::register_exception<std::domain_error>(m, "PreconditionError", PyExc_ValueError);
}
