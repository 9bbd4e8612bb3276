#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fg/io.hpp"
#include "fg/pipeline.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

std::size_t effectiveBudget(std::size_t cliBudget) {
  if (const char* env = std::getenv("FG_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw fg::ConfigError("FG_BUDGET is not a number");
    }
  }
  return cliBudget;
}

fg::IntMatrix loadMatrix(const std::string& inlineText, const std::string& filePath) {
  if (!inlineText.empty()) return fg::IntMatrix::parse(inlineText);
  if (!filePath.empty()) {
    std::string text = fg::readFile(filePath);
    // Accept either the JSON record or the inline row syntax in a file.
    if (text.find('{') != std::string::npos) return fg::matrixFromJson(text);
    return fg::IntMatrix::parse(text);
  }
  throw fg::ConfigError("a matrix is required (--matrix or --matrix-file)");
}

fg::Automorphism loadAut(const std::string& spec, int rank) {
  if (spec == "identity") return fg::Automorphism::identity(rank);
  return fg::automorphismFromJson(fg::readFile(spec));
}

void emit(const std::string& outPath, const std::string& content) {
  if (outPath.empty())
    std::cout << content;
  else
    fg::writeFile(outPath, content);
}

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw fg::ConfigError("empty integer list");
  return out;
}

struct CommonOpts {
  std::size_t budget = fg::kDefaultBudget;
  unsigned long long seed = 0;
  std::string out;
};

void addCommon(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--budget", opts->budget, "letter budget per application");
  cmd->add_option("--seed", opts->seed, "seed for randomized sampling");
  cmd->add_option("--out", opts->out, "output file (stdout when absent)");
}

void echoConfig(const std::string& name, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::cout << "config " << name;
  for (const auto& [key, value] : kv) std::cout << " " << key << "=" << value;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-group automorphism toolkit"};
  app.require_subcommand(1);

  CommonOpts common;

  // --- reduce ---
  std::string reduceWord;
  auto* reduceCmd = app.add_subcommand("reduce", "freely reduce a word");
  reduceCmd->add_option("word", reduceWord, "word in compact text format")->required();

  // --- length ---
  std::string lengthSplitting, lengthWord;
  auto* lengthCmd = app.add_subcommand("length", "translation length of a word on a splitting");
  lengthCmd->add_option("--splitting", lengthSplitting, "splitting JSON file")->required();
  lengthCmd->add_option("--word", lengthWord, "word in compact text format")->required();

  // --- twist ---
  std::string twistSplitting;
  auto* twistCmd = app.add_subcommand("twist", "twist automorphism of a splitting");
  twistCmd->add_option("--splitting", twistSplitting, "splitting JSON file")->required();
  addCommon(twistCmd, &common);

  // --- lift ---
  std::string liftMatrix, liftMatrixFile;
  auto* liftCmd = app.add_subcommand("lift", "factored automorphism inducing a matrix on homology");
  liftCmd->add_option("--matrix", liftMatrix, "inline row syntax, e.g. \"0,0,1;1,0,1;0,1,0\"");
  liftCmd->add_option("--matrix-file", liftMatrixFile, "matrix JSON file");
  addCommon(liftCmd, &common);

  // --- abelianize ---
  std::string abelAut;
  auto* abelCmd = app.add_subcommand("abelianize", "induced matrix on homology");
  abelCmd->add_option("aut", abelAut, "automorphism JSON file")->required();

  // --- construct ---
  std::string ctorMatrix, ctorMatrixFile, ctorTheta, ctorSplitting, ctorEll, ctorN;
  int ctorK = 0, ctorM = 1, ctorMaxLen = 4, ctorMaxPow = 3;
  auto* ctorCmd = app.add_subcommand("construct", "build phi with a prescribed homology action");
  ctorCmd->add_option("--matrix", ctorMatrix, "inline row syntax");
  ctorCmd->add_option("--matrix-file", ctorMatrixFile, "matrix JSON file");
  ctorCmd->add_option("--k", ctorK, "rank (default: matrix size)");
  ctorCmd->add_option("--theta", ctorTheta, "seed automorphism JSON file");
  ctorCmd->add_option("--splitting", ctorSplitting, "base splitting JSON file");
  ctorCmd->add_option("--ell-schedule", ctorEll, "comma-separated pushforward exponents");
  ctorCmd->add_option("--n-schedule", ctorN, "comma-separated twist exponents");
  ctorCmd->add_option("--m", ctorM, "largest twist-product exponent per n");
  ctorCmd->add_option("--max-len", ctorMaxLen, "falsifier class length bound");
  ctorCmd->add_option("--max-pow", ctorMaxPow, "falsifier power bound");
  addCommon(ctorCmd, &common);

  // --- verify lemma51 ---
  auto* verifyCmd = app.add_subcommand("verify", "exhaustive property checks");
  verifyCmd->require_subcommand(1);
  std::string lemS1, lemS2;
  int lemLen = 3, lemNMax = 3;
  auto* lemCmd = verifyCmd->add_subcommand("lemma51", "twist-occurrence inequality scan");
  lemCmd->add_option("--splitting", lemS1, "first splitting JSON file")->required();
  lemCmd->add_option("--splitting2", lemS2, "second splitting JSON file")->required();
  lemCmd->add_option("--length-bound", lemLen, "exhaustive class length bound");
  lemCmd->add_option("--n-max", lemNMax, "largest twist exponent");
  addCommon(lemCmd, &common);

  // --- growth ---
  std::string groS1, groS2, groWord;
  int groNMax = 20;
  auto* groCmd = app.add_subcommand("growth", "twist iterate length growth table");
  groCmd->add_option("--splitting", groS1, "first splitting JSON file")->required();
  groCmd->add_option("--splitting2", groS2, "second splitting JSON file")->required();
  groCmd->add_option("--word", groWord, "probe word")->required();
  groCmd->add_option("--n-max", groNMax, "largest iterate");
  addCommon(groCmd, &common);

  // --- converge ---
  std::string conS1, conS2, conNList = "2,4,8";
  int conMMax = 2, conRadius = 2;
  auto* conCmd = app.add_subcommand("converge", "edge-current concentration of twist-product iterates");
  conCmd->add_option("--splitting", conS1, "first splitting JSON file")->required();
  conCmd->add_option("--splitting2", conS2, "second splitting JSON file")->required();
  conCmd->add_option("--n-list", conNList, "comma-separated twist exponents");
  conCmd->add_option("--m-max", conMMax, "iterate depth per exponent");
  conCmd->add_option("--radius", conRadius, "current window radius");
  addCommon(conCmd, &common);

  // --- falsify-periodic ---
  std::string falAut;
  int falRank = 3, falMaxLen = 4, falMaxPow = 3;
  auto* falCmd = app.add_subcommand("falsify-periodic", "search for a periodic conjugacy class");
  falCmd->add_option("--aut", falAut, "automorphism JSON file, or \"identity\"")->required();
  falCmd->add_option("--rank", falRank, "rank when --aut is \"identity\"");
  falCmd->add_option("--max-len", falMaxLen, "class length bound");
  falCmd->add_option("--max-pow", falMaxPow, "power bound");
  addCommon(falCmd, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    std::size_t budget = effectiveBudget(common.budget);

    if (*reduceCmd) {
      std::cout << fg::Word::parse(reduceWord).str() << "\n";
      return kExitSuccess;
    }

    if (*lengthCmd) {
      auto t = fg::splittingFromJson(fg::readFile(lengthSplitting));
      echoConfig("length", {{"splitting", lengthSplitting}, {"word", lengthWord}});
      std::cout << fg::translationLength(t, fg::Word::parse(lengthWord)) << "\n";
      return kExitSuccess;
    }

    if (*twistCmd) {
      auto t = fg::splittingFromJson(fg::readFile(twistSplitting));
      echoConfig("twist", {{"splitting", twistSplitting}, {"out", common.out}});
      emit(common.out, fg::automorphismToJson(fg::dehnTwist(t)));
      return kExitSuccess;
    }

    if (*liftCmd) {
      auto a = loadMatrix(liftMatrix, liftMatrixFile);
      echoConfig("lift", {{"matrix", a.str()}, {"out", common.out}});
      emit(common.out, fg::automorphismToJson(fg::liftToAut(a)));
      return kExitSuccess;
    }

    if (*abelCmd) {
      auto phi = fg::automorphismFromJson(fg::readFile(abelAut));
      std::cout << fg::abelianization(phi).str() << "\n";
      return kExitSuccess;
    }

    if (*ctorCmd) {
      fg::PipelineConfig config;
      config.a = loadMatrix(ctorMatrix, ctorMatrixFile);
      config.k = ctorK > 0 ? ctorK : config.a.size();
      if (!ctorTheta.empty()) config.seedTheta = loadAut(ctorTheta, config.k);
      if (!ctorSplitting.empty()) config.baseSplitting = fg::splittingFromJson(fg::readFile(ctorSplitting));
      if (!ctorEll.empty()) config.ellSchedule = parseIntList(ctorEll);
      if (!ctorN.empty()) config.nSchedule = parseIntList(ctorN);
      config.mExponent = ctorM;
      config.falsifierMaxLen = ctorMaxLen;
      config.falsifierMaxPow = ctorMaxPow;
      config.budget = budget;
      config.randomSeed = common.seed;
      std::ostringstream ell, ns;
      for (int v : config.ellSchedule) ell << v << ",";
      for (int v : config.nSchedule) ns << v << ",";
      echoConfig("construct",
                 {{"k", std::to_string(config.k)},
                  {"matrix", config.a.str()},
                  {"theta", ctorTheta.empty() ? "default" : ctorTheta},
                  {"splitting", ctorSplitting.empty() ? "default" : ctorSplitting},
                  {"ellSchedule", ell.str()},
                  {"nSchedule", ns.str()},
                  {"m", std::to_string(config.mExponent)},
                  {"maxLen", std::to_string(config.falsifierMaxLen)},
                  {"maxPow", std::to_string(config.falsifierMaxPow)},
                  {"budget", std::to_string(config.budget)},
                  {"seed", std::to_string(config.randomSeed)},
                  {"out", common.out}});
      auto cert = fg::constructPhi(config);
      emit(common.out, fg::renderCertificate(cert));
      if (!common.out.empty())
        std::cout << "ok ell=" << cert.chosenEll << " n=" << cert.chosenN << " m=" << cert.chosenM
                  << "\n";
      return kExitSuccess;
    }

    if (*lemCmd) {
      auto t1 = fg::splittingFromJson(fg::readFile(lemS1));
      auto t2 = fg::splittingFromJson(fg::readFile(lemS2));
      echoConfig("verify-lemma51", {{"splitting", lemS1},
                                    {"splitting2", lemS2},
                                    {"lengthBound", std::to_string(lemLen)},
                                    {"nMax", std::to_string(lemNMax)},
                                    {"budget", std::to_string(budget)}});
      auto reports = fg::verifyLemma51(t1, t2, lemLen, lemNMax, budget);
      emit(common.out, fg::renderInequalityReports(reports));
      for (const auto& report : reports)
        if (!report.pass()) return kExitCheckFailure;
      return kExitSuccess;
    }

    if (*groCmd) {
      auto t1 = fg::splittingFromJson(fg::readFile(groS1));
      auto t2 = fg::splittingFromJson(fg::readFile(groS2));
      echoConfig("growth", {{"splitting", groS1},
                            {"splitting2", groS2},
                            {"word", groWord},
                            {"nMax", std::to_string(groNMax)},
                            {"budget", std::to_string(budget)}});
      auto report = fg::twistGrowth(t1, t2, fg::Word::parse(groWord), groNMax, budget);
      emit(common.out, fg::renderGrowthReport(report));
      return report.deviationBounded ? kExitSuccess : kExitCheckFailure;
    }

    if (*conCmd) {
      auto t1 = fg::splittingFromJson(fg::readFile(conS1));
      auto t2 = fg::splittingFromJson(fg::readFile(conS2));
      echoConfig("converge", {{"splitting", conS1},
                              {"splitting2", conS2},
                              {"nList", conNList},
                              {"mMax", std::to_string(conMMax)},
                              {"radius", std::to_string(conRadius)},
                              {"budget", std::to_string(budget)}});
      auto report = fg::stableCurrentConvergence(t1, t2, parseIntList(conNList), conMMax, conRadius,
                                                 budget);
      emit(common.out, fg::renderConvergenceReport(report));
      return kExitSuccess;
    }

    if (*falCmd) {
      auto phi = loadAut(falAut, falRank);
      echoConfig("falsify-periodic", {{"aut", falAut},
                                      {"rank", std::to_string(phi.rank())},
                                      {"maxLen", std::to_string(falMaxLen)},
                                      {"maxPow", std::to_string(falMaxPow)},
                                      {"budget", std::to_string(budget)}});
      auto report = fg::periodicFalsifier(phi, falMaxLen, falMaxPow, budget);
      emit(common.out, fg::renderFalsifierReport(report));
      if (report.witness) {
        if (!common.out.empty())
          std::cout << "witness " << report.witness->word.str() << " p=" << report.witness->power
                    << "\n";
        return kExitCheckFailure;
      }
      return kExitSuccess;
    }

    return kExitUsage;
  } catch (const fg::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const fg::ScheduleExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const fg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
