#include <pybind11/pybind11.h>

#include <sstream>

#include "fg/io.hpp"
#include "fg/pipeline.hpp"

namespace py = pybind11;
using namespace fg;

namespace {

std::string reduceWord(const std::string& w) { return Word::parse(w).str(); }

std::string liftMatrix(const std::string& matrix) {
  return automorphismToJson(liftToAut(IntMatrix::parse(matrix)));
}

std::string abelianizeAut(const std::string& autJson) {
  return abelianization(automorphismFromJson(autJson)).str();
}

long long translationLengthOf(const std::string& splittingJson, const std::string& word) {
  return translationLength(splittingFromJson(splittingJson), Word::parse(word));
}

std::string construct(const std::string& matrix, unsigned long long seed) {
  PipelineConfig config;
  config.a = IntMatrix::parse(matrix);
  config.k = config.a.size();
  config.randomSeed = seed;
  return renderCertificate(constructPhi(config));
}

}  // namespace

PYBIND11_MODULE(_fgtwist, m) {
  m.doc() = "Free-group automorphism toolkit bindings";
  m.def("reduce_word", &reduceWord, py::arg("word"),
        "Freely reduce a word given in letter form, e.g. 'abA'.");
  m.def("lift", &liftMatrix, py::arg("matrix"),
        "Lift an integer matrix ('0,1;1,0' form) to an automorphism, as JSON.");
  m.def("abelianize", &abelianizeAut, py::arg("automorphism_json"),
        "Abelianization matrix of an automorphism given as JSON.");
  m.def("translation_length", &translationLengthOf, py::arg("splitting_json"), py::arg("word"),
        "Translation length of a conjugacy class on a splitting given as JSON.");
  m.def("construct", &construct, py::arg("matrix"), py::arg("seed") = 0,
        "Run the construction pipeline against a target matrix; returns the "
        "certificate text.");
}
