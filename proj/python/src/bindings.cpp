#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "largeness/error.hpp"
#include "largeness/io.hpp"
#include "largeness/jset.hpp"
#include "largeness/largeness.hpp"
#include "largeness/nwindow.hpp"
#include "largeness/semigroup.hpp"
#include "largeness/sweep.hpp"

namespace py = pybind11;
using namespace largeness;

namespace {

  using Family = std::vector<std::pair<std::vector<Element>, std::vector<Element>>>;

  SubsetMask to_mask(FiniteSemigroup const& S, std::vector<Element> const& xs) {
    for (Element x : xs) {
      if (x >= S.size()) {
        throw Error(Errc::BadEntry, "element " + std::to_string(x) + " is outside the carrier", {x});
      }
    }
    return SubsetMask::from_elements(S.size(), xs);
  }

  SequenceFamily to_family(FiniteSemigroup const& S, Family const& fam) {
    SequenceFamily out;
    for (auto const& [pre, per] : fam) {
      out.push_back(EventuallyPeriodicSeq{pre, per});
    }
    validate_family(S, out);
    return out;
  }

  // Results cross the boundary as JSON text; the Python side decodes it.
  std::string dump(io::json const& j) {
    return j.dump();
  }

  std::string check(FiniteSemigroup const&                     S,
                    std::vector<Element> const&                A,
                    std::string const&                         kind,
                    std::optional<std::vector<Element>> const& core,
                    std::string const&                         route) {
    auto const k = parse_kind(kind);
    if (!k) {
      throw Error(Errc::InvalidArgument, "unknown kind: " + kind);
    }
    auto const r = parse_route(route);
    if (!r) {
      throw Error(Errc::InvalidArgument, "unknown route: " + route);
    }
    std::optional<FilterBase> F;
    if (core) {
      F = principal_filter(S, to_mask(S, *core));
    }
    return dump(io::to_json(check_largeness(S, F ? &*F : nullptr, to_mask(S, A), *k, *r)));
  }

  std::string kernel(FiniteSemigroup const& S, std::optional<std::vector<Element>> const& core) {
    auto const rep = core ? kernel_report(S, to_mask(S, *core)) : kernel_report(S);
    io::json   out;
    out["kernel"]              = io::to_json(rep.kernel);
    out["idempotents"]         = io::to_json(rep.idempotents);
    out["minimal_idempotents"] = io::to_json(rep.minimal_idempotents);
    out["minimal_left_ideals"] = io::json::array();
    for (auto const& L : rep.minimal_left_ideals) {
      out["minimal_left_ideals"].push_back(io::to_json(L));
    }
    out["minimal_right_ideals"] = io::json::array();
    for (auto const& R : rep.minimal_right_ideals) {
      out["minimal_right_ideals"].push_back(io::to_json(R));
    }
    return dump(out);
  }

  std::optional<std::string> j_search(FiniteSemigroup const&      S,
                                      std::vector<Element> const& A,
                                      Family const&               fam,
                                      std::optional<std::size_t>  m_max,
                                      std::optional<std::size_t>  t_max) {
    auto const family = to_family(S, fam);
    auto const result = m_max || t_max ? j_witness(S, to_mask(S, A), family, JBounds{m_max.value_or(4), t_max.value_or(8)})
                                       : j_witness(S, to_mask(S, A), family);
    if (!result.witness) {
      return std::nullopt;
    }
    return dump(io::to_json(*result.witness));
  }

  std::string sweep(std::string const&         id,
                    std::size_t                order,
                    std::optional<std::size_t> sample,
                    std::uint64_t              seed,
                    std::size_t                jobs,
                    bool                       monoids_only) {
    SweepOptions o;
    o.order        = order;
    o.sample       = sample;
    o.seed         = seed;
    o.jobs         = std::max<std::size_t>(1, jobs);
    o.monoids_only = monoids_only;
    SweepReport report;
    {
      py::gil_scoped_release release;
      report = run_sweep(id, o);
    }
    return dump(io::to_json(report));
  }

  std::string window(std::string const& name, std::size_t W, std::string const& kind, std::size_t gap, std::size_t run) {
    WindowSet const ws = builtin_set(name, W);
    WindowCheck     c;
    if (kind == "syndetic") {
      c = WindowCheck::syndetic(gap);
    } else if (kind == "thick") {
      c = WindowCheck::thick(run);
    } else if (kind == "pws") {
      c = WindowCheck::pws(gap, run);
    } else {
      throw Error(Errc::InvalidArgument, "unknown window check: " + kind);
    }
    return dump(io::to_json(windowed_check(ws, c)));
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact largeness checks on finite semigroups";

  static py::exception<Error> error(m, "LargenessError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::object inst   = py::handle(error.ptr())(e.what());
      inst.attr("code") = py::str(std::string(errc_name(e.code())));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def(py::init([](Table const& table, std::string const& name) { return validate_table(table.size(), table, name); }),
           py::arg("table"), py::arg("name") = "")
      .def_static("builtin",
                  [](std::string const& name) {
                    auto S = builtin::by_name(name);
                    if (!S) {
                      throw Error(Errc::InvalidArgument, "unknown builtin semigroup: " + name);
                    }
                    return *S;
                  })
      .def("__len__", &FiniteSemigroup::size)
      .def("__call__", [](FiniteSemigroup const& S, Element x, Element y) {
        if (x >= S.size() || y >= S.size()) {
          throw py::index_error("element outside the carrier");
        }
        return S(x, y);
      })
      .def("__eq__", [](FiniteSemigroup const& a, FiniteSemigroup const& b) { return a == b; })
      .def_property_readonly("name", &FiniteSemigroup::name)
      .def_property_readonly("table", &FiniteSemigroup::rows)
      .def("is_commutative", &FiniteSemigroup::is_commutative)
      .def("identity", &FiniteSemigroup::identity)
      .def("to_json", [](FiniteSemigroup const& S) { return dump(io::to_json(S)); })
      .def_static("from_json", [](std::string const& text) {
        return io::semigroup_from_json(io::parse_document(text, "<string>"), "<string>");
      })
      .def("__repr__", [](FiniteSemigroup const& S) {
        return "<Semigroup " + (S.name().empty() ? std::string("order ") + std::to_string(S.size()) : S.name()) + ">";
      });

  m.def("direct_product", &direct_product);
  m.def("enumerate_semigroups", &enumerate_semigroups, py::arg("n"));
  m.def("subsemigroups", [](FiniteSemigroup const& S) {
    std::vector<std::vector<Element>> out;
    for (auto const& E : subsemigroups(S)) {
      out.push_back(E.elements());
    }
    return out;
  });
  m.def("translate_preimage", [](FiniteSemigroup const& S, Element t, std::vector<Element> const& A) {
    if (t >= S.size()) {
      throw Error(Errc::BadEntry, "translator outside the carrier", {t});
    }
    return translate_preimage(S, t, to_mask(S, A)).elements();
  });
  m.def("_kernel", &kernel, py::arg("S"), py::arg("core") = std::nullopt);
  m.def("_check", &check, py::arg("S"), py::arg("A"), py::arg("kind"), py::arg("core") = std::nullopt,
        py::arg("route") = "closed-form");
  m.def("zfp", [](FiniteSemigroup const& S, Family const& fam, std::size_t min_index) {
    return zfp(S, to_family(S, fam), min_index).elements();
  }, py::arg("S"), py::arg("family"), py::arg("min_index") = 1);
  m.def("is_good", [](FiniteSemigroup const& S, std::vector<Element> const& core, Family const& fam) {
    return is_good(S, principal_filter(S, to_mask(S, core)), to_family(S, fam));
  });
  m.def("_j_witness", &j_search, py::arg("S"), py::arg("A"), py::arg("family"), py::arg("m_max") = std::nullopt,
        py::arg("t_max") = std::nullopt);
  m.def("_sweep", &sweep, py::arg("id"), py::arg("order"), py::arg("sample") = std::nullopt, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("monoids_only") = false);
  m.def("sweep_ids", [] {
    std::vector<std::string> ids;
    for (auto const& info : sweep_catalog()) {
      ids.push_back(info.id);
    }
    return ids;
  });
  m.def("_window", &window, py::arg("name"), py::arg("window"), py::arg("kind"), py::arg("gap") = 0,
        py::arg("run") = 0);
}
