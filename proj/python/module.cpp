#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surgeon/cusped.hpp"
#include "surgeon/families.hpp"
#include "surgeon/tables.hpp"

namespace py = pybind11;
using namespace surgeon;

namespace {

ExtRational rat(const std::string& text) { return parse_ext_rational(text); }

FamilyParams params(const std::string& m, const std::string& r, const std::string& s,
                    const std::string& b, long long k) {
    return FamilyParams{rat(m), rat(r), rat(s), rat(b), k};
}

} // namespace

PYBIND11_MODULE(surgeonpy, mod) {
    mod.doc() = "Exact chain link surgery calculus and lens space classification";

    mod.def("cf_eval", [](const std::vector<std::string>& entries) {
        std::vector<ExtRational> e;
        for (const auto& s : entries) e.push_back(rat(s));
        return to_string(cf_eval(CFWord(e)));
    });
    mod.def("cf_expand", [](const std::string& x) { return cf_expand(rat(x)); });
    mod.def("eval_chain", [](const std::string& chain) {
        return to_string(chain_eval(parse_chain(chain)));
    });
    mod.def("chain_h1", [](const std::string& chain) { return chain_h1_oracle(parse_chain(chain)); });
    mod.def("lens_homeomorphic",
            [](long long p, long long q, long long p2, long long q2, bool oriented) {
                return is_homeomorphic(manifold_from_pq(p, q), manifold_from_pq(p2, q2), oriented);
            },
            py::arg("p"), py::arg("q"), py::arg("p2"), py::arg("q2"), py::arg("oriented") = false);

    mod.def("family_y", [](const std::string& m, const std::string& r, const std::string& s,
                           const std::string& b) -> py::object {
        auto y = compute_Y(params(m, r, s, b, 0));
        if (!y) return py::none();
        return py::cast(to_string(*y));
    });
    mod.def("family_ystar", [](const std::string& m, const std::string& r, const std::string& s,
                               const std::string& b, long long k) {
        return to_string(compute_Ystar(params(m, r, s, b, k)));
    });
    mod.def("magic_filling", [](const std::string& a, const std::string& b,
                                const std::string& c) -> py::object {
        auto m = magic_filling(rat(a), rat(b), rat(c));
        if (!m) return py::none();
        return py::cast(to_string(*m));
    });
    mod.def("whitehead_filling", [](const std::string& a, const std::string& b) -> py::object {
        auto m = whitehead_filling(rat(a), rat(b));
        if (!m) return py::none();
        return py::cast(to_string(*m));
    });
    mod.def("cable_slope", [](const std::string& m, const std::string& r, long long k) {
        return to_string(cable_slope(rat(m), rat(r), k));
    });
    mod.def("realizable_as",
            [](long long p, long long q, const std::string& family) -> py::object {
                LensFamily fam = family == "33" ? LensFamily::F33 : LensFamily::F24;
                auto w = realizable_as(manifold_from_pq(p, q), fam);
                if (!w) return py::none();
                return py::make_tuple(w->first, w->second);
            });

    mod.def("normalized_length", [](long long p, long long q, double mu_re, double mu_im,
                                    double la_re, double la_im) {
        return normalized_length(Slope::make(p, q), CuspShape{{mu_re, mu_im}, {la_re, la_im}});
    });
    mod.attr("hk_length_bound") = hk_length_bound;

    mod.def("verify_dhl", [] {
        VerificationReport r = verify_dhl();
        return py::make_tuple(int(r.rows.size()),
                              int(r.rows.size()) - r.count(RowStatus::Mismatch) -
                                  r.count(RowStatus::Unsupported),
                              r.clean());
    });
    mod.def("audit_table", [](const std::string& id, long long lo, long long hi) {
        VerificationReport r = audit_table(id, AuditRanges{lo, hi});
        return py::make_tuple(int(r.rows.size()), r.unexplained_failures(), r.clean());
    });
    mod.def("emit_report", [](const std::string& id, long long lo, long long hi,
                              const std::string& format) {
        return emit_report(audit_table(id, AuditRanges{lo, hi}),
                           format == "json" ? ReportFormat::Json : ReportFormat::Csv);
    });
}
