#pragma once

#include <string>

#include "fg/automorphism.hpp"
#include "fg/dynamics.hpp"
#include "fg/intmat.hpp"
#include "fg/pipeline.hpp"
#include "fg/splitting.hpp"

namespace fg {

// JSON interchange. Schemas:
//   automorphism: { "rank": k, "images": [word strings],
//                   "inverseImages"?: [word strings], "factors"?: [move records] }
//   move record:  { "kind": "leftMultiply"|"rightMultiply"|"invert"|"swap"|
//                           "permute"|"innerConjugate",
//                   "i"?: int, "j"?: int, "perm"?: [ints], "u"?: word string }
//   matrix:       { "k": k, "rows": [[ints]] }
//   splitting:    { "kind": "amalgam"|"hnn", "rank": k,
//                   "relChange": automorphism object or "identity",
//                   "edgeLetter": int, "aPart"?: [ints], "stableLetter"?: int }
// Words everywhere use the compact text format ("abA", empty word "1").

std::string automorphismToJson(const Automorphism& phi);
Automorphism automorphismFromJson(const std::string& text);

std::string matrixToJson(const IntMatrix& a);
IntMatrix matrixFromJson(const std::string& text);

std::string splittingToJson(const CyclicSplitting& t);
CyclicSplitting splittingFromJson(const std::string& text);

// Structured text reports; exact rationals rendered as "p/q".
std::string renderRational(const Rational& r);
std::string renderInequalityReports(const std::vector<InequalityReport>& reports);
std::string renderGrowthReport(const GrowthReport& report);
std::string renderConvergenceReport(const ConvergenceReport& report);
std::string renderFalsifierReport(const FalsifierReport& report);
std::string renderCertificate(const ConstructionCertificate& cert);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace fg
