#include "lamplab/depth.hpp"
#include "lamplab/halting_set.hpp"
#include "lamplab/lamp.hpp"
#include "lamplab/machines.hpp"
#include "lamplab/profinite.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lamplab;

namespace {

// arbitrary-precision values cross the boundary as decimal strings

Int to_int(const py::object& obj) { return Int(py::str(obj).cast<std::string>()); }

py::object to_pyint(const Int& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

Rat to_rat(const py::object& obj) {
    Rat r(py::str(obj).cast<std::string>());
    r.canonicalize();
    return r;
}

py::object to_fraction(const Rat& q) {
    auto frac = py::module_::import("fractions").attr("Fraction");
    return frac(q.get_num().get_str() + "/" + q.get_den().get_str());
}

py::dict membership_dict(const MembershipAnswer& ans) {
    py::dict d;
    d["verdict"] = ans.verdict;
    d["certificate"] = ans.describe();
    d["n"] = ans.n;
    d["k"] = to_pyint(ans.k);
    if (ans.ball) d["ball"] = py::make_tuple(to_pyint(ans.ball->residue), to_pyint(ans.ball->modulus));
    return d;
}

std::vector<Progression> to_progressions(const py::iterable& it) {
    std::vector<Progression> out;
    for (py::handle h : it) {
        auto pair = h.cast<py::tuple>();
        out.emplace_back(to_int(pair[0]), to_int(pair[1]));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_lamplab, m) {
    m.doc() = "profinite metric on Z, machine-driven open sets, and the word problem in "
              "amalgamated lamplighter groups";

    py::class_<Progression>(m, "Progression")
        .def(py::init([](const py::object& c, const py::object& mod) {
            return Progression(to_int(c), to_int(mod));
        }))
        .def_property_readonly("residue", [](const Progression& p) { return to_pyint(p.residue); })
        .def_property_readonly("modulus", [](const Progression& p) { return to_pyint(p.modulus); })
        .def("contains", [](const Progression& p, const py::object& x) { return p.contains(to_int(x)); })
        .def("subset_of", &Progression::subset_of)
        .def("__eq__", [](const Progression& a, const Progression& b) { return a == b; })
        .def("__repr__", &Progression::str);

    m.def("theta", [](const py::object& n) { return to_pyint(theta(to_int(n))); });
    m.def("norm", [](const py::object& x) { return to_fraction(norm(to_int(x))); });
    m.def("dist", [](const py::object& x, const py::object& y) {
        return to_fraction(dist(to_int(x), to_int(y)));
    });
    m.def("closed_ball", [](const py::object& x, const py::object& n) {
        return closed_ball(to_int(x), to_int(n));
    });
    m.def("open_ball", [](const py::object& x, const py::object& r) {
        return open_ball(to_int(x), to_rat(r));
    });
    m.def("progression_covered_by",
          [](const Progression& p, const py::iterable& qs, const py::object& budget) {
              switch (progression_covered_by(p, to_progressions(qs), to_int(budget))) {
                  case CoverResult::Covered: return "covered";
                  case CoverResult::NotCovered: return "not-covered";
                  default: return "budget-exhausted";
              }
          },
          py::arg("p"), py::arg("qs"), py::arg("budget") = 1000000);

    m.def("t_seq", [](int n) { return to_pyint(t_seq(n)); });

    py::class_<Registry>(m, "Registry")
        .def(py::init<>())
        .def("add_text", &Registry::add_text)
        .def("add_file", &Registry::add_file)
        .def("__len__", &Registry::size)
        .def("run", [](const Registry& r, std::size_t n, std::uint64_t budget) {
            RunStatus st = run_bounded(r.at(n), budget);
            return py::make_tuple(st.halted, st.steps);
        })
        .def("audit", [](const Registry& r, std::uint64_t budget) -> py::object {
            auto bad = audit_registry(r, budget);
            return bad ? py::cast(*bad) : py::none();
        });

    py::class_<HaltingSet>(m, "HaltingSet")
        .def(py::init<Registry>())
        .def("xn_params",
             [](const HaltingSet& h, int n) {
                 XnParams p = h.xn_params(n);
                 py::dict d;
                 d["n"] = p.n;
                 d["t_n"] = to_pyint(p.t_n);
                 d["m"] = to_pyint(p.m);
                 d["r_n"] = to_fraction(p.r_n);
                 return d;
             })
        .def("member_b", [](const HaltingSet& h, const py::object& x) {
            return membership_dict(h.member_B(to_int(x)));
        })
        .def("member_a", [](const HaltingSet& h, const py::object& x) {
            return h.member_A(to_int(x));
        })
        .def("describe_xn",
             [](const HaltingSet& h, int n, std::uint64_t budget) {
                 XnDescription desc = h.describe_Xn(n, budget);
                 py::dict d;
                 d["exact"] = desc.exact;
                 d["steps"] = desc.steps;
                 py::list balls;
                 for (const auto& b : desc.balls)
                     balls.append(py::make_tuple(to_pyint(b.residue), to_pyint(b.modulus)));
                 d["balls"] = balls;
                 if (desc.exact) {
                     d["y"] = to_pyint(desc.y);
                     d["r_prime"] = to_fraction(desc.r_prime);
                 }
                 return d;
             })
        .def("witness",
             [](const HaltingSet& h, const py::object& x, std::uint64_t budget) {
                 WitnessResult w = h.openness_witness(to_int(x), budget);
                 py::dict d;
                 d["known"] = w.known;
                 if (w.known) {
                     d["modulus"] = to_pyint(w.modulus);
                     d["verified"] = w.verified;
                 } else {
                     d["budget"] = w.budget;
                 }
                 return d;
             })
        .def("halting_bound", [](const HaltingSet& h, int n, const py::object& r) {
            return to_pyint(h.halting_bound_from_certificate(n, to_rat(r)));
        });

    m.def("is_trivial", [](const std::string& word, const HaltingSet& h) {
        return is_trivial(parse_word(word),
                          [&h](long long i) { return h.member_A(Int(static_cast<long>(i))); });
    });
    m.def("normal_form", [](const std::string& word, const HaltingSet& h) {
        auto nf = normal_form(parse_word(word),
                              [&h](long long i) { return h.member_A(Int(static_cast<long>(i))); });
        py::list out;
        for (const auto& s : nf) {
            py::list lamps;
            for (long long i : s.elem.lamps) lamps.append(i);
            out.append(py::make_tuple(s.factor == Factor::Plain ? "L" : "L^", lamps,
                                      s.elem.shift));
        }
        return out;
    });
    m.def("eval_factor", [](const std::string& word) {
        LampElement e = eval_factor(parse_word(word));
        py::list lamps;
        for (long long i : e.lamps) lamps.append(i);
        return py::make_tuple(lamps, e.shift);
    });

    m.def("quotient_kill_shifts",
          [](const HaltingSet& h, const py::object& x, const py::object& N,
             const py::object& budget) {
              QuotientVerdict v = quotient_kill_shifts(h, to_int(x), to_int(N), to_int(budget));
              py::dict d;
              switch (v.kind) {
                  case QuotientVerdict::Kind::Identity: d["kind"] = "identity"; break;
                  case QuotientVerdict::Kind::NonIdentity: d["kind"] = "non-identity"; break;
                  default: d["kind"] = "budget-exhausted";
              }
              if (v.witness) d["witness"] = to_pyint(*v.witness);
              return d;
          },
          py::arg("hs"), py::arg("x"), py::arg("N"), py::arg("budget") = 1000);
    m.def("depth_table",
          [](const HaltingSet& h, const py::iterable& xs, const py::iterable& schedule,
             std::uint64_t budget) {
              std::vector<Int> xs_v, sched_v;
              for (py::handle o : xs) xs_v.push_back(to_int(py::reinterpret_borrow<py::object>(o)));
              for (py::handle o : schedule)
                  sched_v.push_back(to_int(py::reinterpret_borrow<py::object>(o)));
              auto rows = depth_table(h, xs_v, sched_v, budget);
              py::list out;
              for (const auto& row : rows) {
                  py::dict d;
                  d["x"] = to_pyint(row.x);
                  d["word_length"] = to_pyint(row.word_length);
                  d["skipped"] = row.skipped;
                  d["certificate"] = row.certificate;
                  d["witness_modulus"] =
                      row.witness_modulus ? to_pyint(*row.witness_modulus) : py::none();
                  out.append(d);
              }
              return out;
          },
          py::arg("hs"), py::arg("xs"), py::arg("schedule"), py::arg("budget") = 10000);
    m.def("theta_schedule", [](int s_max) {
        py::list out;
        for (const Int& t : theta_schedule(s_max)) out.append(to_pyint(t));
        return out;
    });
}
