#include "fg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fg {

namespace {

using nlohmann::json;

std::string moveKindName(ElementaryMove::Kind kind) {
  switch (kind) {
    case ElementaryMove::Kind::LeftMultiply: return "leftMultiply";
    case ElementaryMove::Kind::RightMultiply: return "rightMultiply";
    case ElementaryMove::Kind::Invert: return "invert";
    case ElementaryMove::Kind::Swap: return "swap";
    case ElementaryMove::Kind::Permute: return "permute";
    case ElementaryMove::Kind::InnerConjugate: return "innerConjugate";
  }
  throw ConfigError("unknown move kind");
}

ElementaryMove::Kind moveKindFromName(const std::string& name) {
  if (name == "leftMultiply") return ElementaryMove::Kind::LeftMultiply;
  if (name == "rightMultiply") return ElementaryMove::Kind::RightMultiply;
  if (name == "invert") return ElementaryMove::Kind::Invert;
  if (name == "swap") return ElementaryMove::Kind::Swap;
  if (name == "permute") return ElementaryMove::Kind::Permute;
  if (name == "innerConjugate") return ElementaryMove::Kind::InnerConjugate;
  throw ConfigError("unknown move kind \"" + name + "\"");
}

json moveToJson(const ElementaryMove& move) {
  json out;
  out["kind"] = moveKindName(move.kind);
  switch (move.kind) {
    case ElementaryMove::Kind::LeftMultiply:
    case ElementaryMove::Kind::RightMultiply:
    case ElementaryMove::Kind::Swap:
      out["i"] = move.i;
      out["j"] = move.j;
      break;
    case ElementaryMove::Kind::Invert:
      out["i"] = move.i;
      break;
    case ElementaryMove::Kind::Permute:
      out["perm"] = move.perm;
      break;
    case ElementaryMove::Kind::InnerConjugate:
      out["u"] = move.u.str();
      break;
  }
  return out;
}

ElementaryMove moveFromJson(const json& in) {
  auto kind = moveKindFromName(in.at("kind").get<std::string>());
  switch (kind) {
    case ElementaryMove::Kind::LeftMultiply:
      return ElementaryMove::leftMultiply(in.at("i").get<int>(), in.at("j").get<int>());
    case ElementaryMove::Kind::RightMultiply:
      return ElementaryMove::rightMultiply(in.at("i").get<int>(), in.at("j").get<int>());
    case ElementaryMove::Kind::Invert:
      return ElementaryMove::invert(in.at("i").get<int>());
    case ElementaryMove::Kind::Swap:
      return ElementaryMove::swapGens(in.at("i").get<int>(), in.at("j").get<int>());
    case ElementaryMove::Kind::Permute:
      return ElementaryMove::permute(in.at("perm").get<std::vector<int>>());
    case ElementaryMove::Kind::InnerConjugate:
      return ElementaryMove::innerConjugate(Word::parse(in.at("u").get<std::string>()));
  }
  throw ConfigError("unknown move kind");
}

json automorphismToJsonValue(const Automorphism& phi) {
  json out;
  out["rank"] = phi.rank();
  json images = json::array();
  for (const auto& w : phi.images()) images.push_back(w.str());
  out["images"] = images;
  if (phi.inverseImages()) {
    json inv = json::array();
    for (const auto& w : *phi.inverseImages()) inv.push_back(w.str());
    out["inverseImages"] = inv;
  }
  if (phi.factors()) {
    json factors = json::array();
    for (const auto& move : *phi.factors()) factors.push_back(moveToJson(move));
    out["factors"] = factors;
  }
  return out;
}

Automorphism automorphismFromJsonValue(const json& in) {
  int rank = in.at("rank").get<int>();
  if (in.contains("factors")) {
    std::vector<ElementaryMove> factors;
    for (const auto& item : in.at("factors")) factors.push_back(moveFromJson(item));
    Automorphism phi = Automorphism::fromFactors(rank, factors);
    if (in.contains("images")) {
      std::vector<Word> images;
      for (const auto& item : in.at("images")) images.push_back(Word::parse(item.get<std::string>()));
      if (images != phi.images()) throw ConfigError("stored images disagree with stored factors");
    }
    return phi;
  }
  std::vector<Word> images;
  for (const auto& item : in.at("images")) images.push_back(Word::parse(item.get<std::string>()));
  std::optional<std::vector<Word>> inverseImages;
  if (in.contains("inverseImages")) {
    std::vector<Word> inv;
    for (const auto& item : in.at("inverseImages")) inv.push_back(Word::parse(item.get<std::string>()));
    inverseImages = std::move(inv);
  }
  return Automorphism::fromImages(rank, std::move(images), std::move(inverseImages));
}

json parseOrThrow(const std::string& text) {
  json in = json::parse(text, nullptr, false);
  if (in.is_discarded()) throw ConfigError("malformed JSON input");
  return in;
}

}  // namespace

std::string automorphismToJson(const Automorphism& phi) {
  return automorphismToJsonValue(phi).dump(2) + "\n";
}

Automorphism automorphismFromJson(const std::string& text) {
  try {
    return automorphismFromJsonValue(parseOrThrow(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad automorphism record: ") + e.what());
  }
}

std::string matrixToJson(const IntMatrix& a) {
  json out;
  out["k"] = a.size();
  json rows = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(a.at(i, j));
    rows.push_back(row);
  }
  out["rows"] = rows;
  return out.dump(2) + "\n";
}

IntMatrix matrixFromJson(const std::string& text) {
  try {
    json in = parseOrThrow(text);
    int k = in.at("k").get<int>();
    std::vector<long long> entries;
    for (const auto& row : in.at("rows"))
      for (const auto& cell : row) entries.push_back(cell.get<long long>());
    return IntMatrix(k, std::move(entries));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad matrix record: ") + e.what());
  }
}

std::string splittingToJson(const CyclicSplitting& t) {
  json out;
  out["kind"] = t.kind() == CyclicSplitting::Kind::Amalgam ? "amalgam" : "hnn";
  out["rank"] = t.rank();
  if (t.relChange().isIdentity())
    out["relChange"] = "identity";
  else
    out["relChange"] = automorphismToJsonValue(t.relChange());
  out["edgeLetter"] = t.edgeLetter();
  if (t.kind() == CyclicSplitting::Kind::Amalgam)
    out["aPart"] = t.aPart();
  else
    out["stableLetter"] = t.stableLetter();
  return out.dump(2) + "\n";
}

CyclicSplitting splittingFromJson(const std::string& text) {
  try {
    json in = parseOrThrow(text);
    int rank = in.at("rank").get<int>();
    Automorphism relChange = Automorphism::identity(rank);
    if (in.contains("relChange") && !in.at("relChange").is_string())
      relChange = automorphismFromJsonValue(in.at("relChange"));
    std::string kind = in.at("kind").get<std::string>();
    int edgeLetter = in.at("edgeLetter").get<int>();
    if (kind == "amalgam")
      return CyclicSplitting::amalgam(rank, in.at("aPart").get<std::vector<int>>(), edgeLetter,
                                      std::move(relChange));
    if (kind == "hnn")
      return CyclicSplitting::hnn(rank, edgeLetter, in.at("stableLetter").get<int>(),
                                  std::move(relChange));
    throw ConfigError("unknown splitting kind \"" + kind + "\"");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad splitting record: ") + e.what());
  }
}

std::string renderRational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string renderInequalityReports(const std::vector<InequalityReport>& reports) {
  std::ostringstream out;
  for (const auto& report : reports) {
    out << "inequality " << report.id << " samples=" << report.samples
        << " skipped=" << report.skippedSamples << " exhaustiveUpToLength=" << report.exhaustiveUpToLength
        << " nMax=" << report.nMax << " result=" << (report.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& v : report.violations)
      out << "  violation x=" << v.x.str() << " n=" << v.n << " r=" << v.r << " lhs=" << v.lhs
          << " rhs=" << v.rhs << "\n";
  }
  return out.str();
}

std::string renderGrowthReport(const GrowthReport& report) {
  std::ostringstream out;
  out << "growth linearCoefficient=" << report.linearCoefficient
      << " slopeRatioAtEnd=" << renderRational(report.slopeRatioAtEnd)
      << " maxAbsDeviation=" << report.maxAbsDeviation
      << " deviationBounded=" << (report.deviationBounded ? "yes" : "no") << "\n";
  for (const auto& row : report.rows)
    out << "  n=" << row.n << " length=" << row.length << " deviation=" << row.deviation << "\n";
  return out.str();
}

std::string renderConvergenceReport(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "convergence seed=" << report.seed.str() << " fillingChecked="
      << (report.fillingChecked ? "yes" : "no") << " fillingPassed="
      << (report.fillingPassed ? "yes" : "no") << "\n";
  for (const auto& cell : report.cells)
    out << "  cell n=" << cell.n << " mUsed=" << cell.mUsed
        << " mirror=" << (cell.mirror ? "yes" : "no")
        << " truncated=" << (cell.truncated ? "yes" : "no")
        << " massOnEdge=" << renderRational(cell.massOnEdge)
        << " deficit=" << renderRational(cell.deficit)
        << " gapRadius=" << cell.gapToEdgeCurrent.radius
        << " supGap=" << renderRational(cell.gapToEdgeCurrent.supGap) << "\n";
  return out.str();
}

std::string renderFalsifierReport(const FalsifierReport& report) {
  std::ostringstream out;
  out << "falsifier maxLen=" << report.maxLen << " maxPow=" << report.maxPow
      << " scanned=" << report.scanned << " skipped=" << report.skipped << "\n";
  if (report.witness)
    out << "  witness " << report.witness->word.str() << " p=" << report.witness->power << "\n";
  else
    out << "  witness none\n";
  return out.str();
}

std::string renderCertificate(const ConstructionCertificate& cert) {
  std::ostringstream out;
  out << "certificate\n";
  out << "phi:\n" << automorphismToJson(cert.phi);
  out << "phiStar: " << cert.phiStar.str() << "\n";
  out << "matrixCheck: " << (cert.matrixCheck ? "pass" : "FAIL") << "\n";
  out << "twistChecks: " << (cert.twistChecksPassed ? "pass" : "FAIL") << "\n";
  out << "chosen: ell=" << cert.chosenEll << " n=" << cert.chosenN << " m=" << cert.chosenM << "\n";
  out << "filling: passes=" << (cert.fillingReport.passes ? "yes" : "no")
      << " lengthBound=" << cert.fillingReport.lengthBound
      << " scanned=" << cert.fillingReport.scanned
      << " violations=" << cert.fillingReport.violations.size() << "\n";
  out << renderInequalityReports(cert.lemma51Report);
  out << renderConvergenceReport(cert.convergence);
  out << renderFalsifierReport(cert.falsifierResult);
  out << "caveats:\n";
  for (const auto& caveat : cert.caveats) out << "  - " << caveat << "\n";
  return out.str();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write file \"" + path + "\"");
  out << content;
}

}  // namespace fg
