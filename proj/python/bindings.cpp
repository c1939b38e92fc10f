#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncalg/casimir.hpp"
#include "ncalg/filtration.hpp"
#include "ncalg/verify.hpp"

namespace py = pybind11;
using namespace ncalg;
using nlohmann::json;

namespace {

const AlgebraMap& named_map(const std::string& name, const std::string& alg) {
    if (name == "zeta") return zeta();
    if (name == "sigma") return sigma_on(alg);
    if (name == "tau") return tau_on(alg);
    throw std::invalid_argument("unknown map '" + name + "' (zeta, sigma, tau)");
}

// structured results cross the boundary as JSON text; the package decodes them
std::string confluence_json(const std::string& alg) {
    auto p = load_presentation(alg);
    auto reports = check_confluence(p->system());
    json nontrivial = json::array();
    for (const auto& r : reports) {
        if (!r.trivial) nontrivial.push_back({{"word", word_to_text(*p->alphabet(), r.word)},
                                              {"result", r.left_result.to_text()},
                                              {"resolvable", r.resolvable}});
    }
    return json{{"algebra", p->name()},
                {"terminates", p->system().termination().terminates},
                {"ambiguities", reports.size()},
                {"nontrivial", nontrivial},
                {"resolvable", all_resolvable(reports)}}
        .dump();
}

std::string criteria_json(const std::vector<int>& ids) {
    json list = json::array();
    for (const auto& r : run_acceptance(ids)) list.push_back(to_json(r));
    return list.dump();
}

std::string identities_json() {
    json list = json::array();
    for (const auto& id : builtin_identities()) list.push_back(to_json(check_identity(id)));
    return list.dump();
}

}  // namespace

PYBIND11_MODULE(_ncalg, m) {
    m.doc() = "Normal forms and verification for the Racah and Bannai-Ito algebras";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<NotInCentralizerImage> not_central(m, "NotInCentralizerImage", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            std::string msg = "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": " +
                              e.reason();
            py::object exc = parse_error;
            py::object err = exc(msg);
            err.attr("line") = e.line();
            err.attr("column") = e.column();
            PyErr_SetObject(parse_error.ptr(), err.ptr());
        } catch (const NotInCentralizerImage& e) {
            py::object exc = not_central;
            py::object err = exc(e.what());
            err.attr("offending") = e.offending();
            PyErr_SetObject(not_central.ptr(), err.ptr());
        }
    });

    m.def("reduce", [](const std::string& alg, const std::string& expr) {
        return load_presentation(alg)->parse(expr).to_text();
    }, py::arg("algebra"), py::arg("expression"));

    m.def("_confluence", &confluence_json, py::arg("algebra"));

    m.def("apply_map", [](const std::string& name, const std::string& expr, const std::string& alg) {
        return named_map(name, alg).apply(std::string_view(expr)).to_text();
    }, py::arg("map"), py::arg("expression"), py::arg("algebra") = "racah");

    m.def("is_filtration", [](const std::vector<unsigned>& w) { return is_filtration(WeightVector(w)); },
          py::arg("weights"));

    m.def("leading_form", [](const std::vector<unsigned>& w, long level, const std::string& expr) {
        return leading_form(WeightVector(w), bannai_ito()->parse(expr), level).to_text();
    }, py::arg("weights"), py::arg("level"), py::arg("expression"));

    m.def("casimir_express", [](const std::string& expr) {
        return express_casimir(racah()->parse(expr)).to_text(kCentralNames);
    }, py::arg("expression"));

    m.def("_zeta_rank", [](int max_weight) { return zeta_rank_check(max_weight).to_json().dump(); },
          py::arg("max_weight") = 40);

    m.def("_identities", &identities_json);
    m.def("_criteria", &criteria_json, py::arg("ids") = std::vector<int>{});
}
