#include <algorithm>
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "report.hpp"

using namespace tsaudit;
using namespace tsaudit::cli;

namespace {

struct Common {
  std::vector<std::string> args;
  OutputOptions out;
  unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& c, const char* what) {
  cmd->add_option("args", c.args, what)->required();
  cmd->add_flag("--json", c.out.json, "Emit the report.v1 JSON report");
  cmd->add_flag("--decimal", c.out.decimal, "Add approximate decimals next to exact values (non-authoritative)");
  cmd->add_flag("--timing", c.out.timing, "Report parse and analysis time");
  cmd->add_option("--max-states", c.out.max_states, "Refuse spaces with more states (default: TSAUDIT_MAX_STATES or 24)")
      ->check(CLI::Range(std::size_t{1}, kMaxStatesHard));
}

// Drops an optional leading verb ("bet find x.tsjson" == "bet x.tsjson").
void drop_verb(std::vector<std::string>& args, const char* verb) {
  if (args.size() > 1 && args.front() == verb) args.erase(args.begin());
}

int emit(const std::vector<Report>& reports, const OutputOptions& out) {
  int code = kOk;
  for (const auto& r : reports) code = std::max(code, r.exit_code);
  if (out.json) {
    if (reports.size() == 1) {
      std::cout << reports.front().json.dump(2) << "\n";
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(r.json);
      std::cout << all.dump(2) << "\n";
    }
    return code;
  }
  for (const auto& r : reports) (r.exit_code >= kInput ? std::cerr : std::cout) << r.text;
  return code;
}

// Runs fn on every file, `jobs` at a time; reports keep the input order.
template <typename Fn>
std::vector<Report> over_files(const std::vector<std::string>& files, unsigned jobs, Fn fn) {
  std::vector<Report> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) reports[k] = fn(files[k]);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit finite type spaces: validity, common certainty components, consistency, bets, money pumps"};
  app.require_subcommand(1);

  Common c;
  c.out.max_states = state_soft_limit();

  auto* validate = app.add_subcommand("validate", "Check the probability, measurability and truth axioms");
  add_common(validate, c, "Type space files");
  validate->add_option("--jobs", c.jobs, "Files analyzed in parallel")->check(CLI::Range(1U, 256U));

  auto* classify = app.add_subcommand("classify", "Consistency level with certificates");
  add_common(classify, c, "Type space files");
  classify->add_option("--jobs", c.jobs, "Files analyzed in parallel")->check(CLI::Range(1U, 256U));

  std::optional<std::string> players;
  auto* components = app.add_subcommand("components", "Minimal common certainty components and closures");
  add_common(components, c, "Type space files");
  components->add_option("--jobs", c.jobs, "Files analyzed in parallel")->check(CLI::Range(1U, 256U));
  components->add_option("--players", players, "Comma-separated player names (default: all)");

  BetRequest bet_req{"agreeable", std::nullopt};
  auto* bet = app.add_subcommand("bet", "Find a bet of the given kind, or verify one");
  add_common(bet, c, "[find] <file>");
  bet->add_option("--kind", bet_req.kind, "agreeable | weak | acceptable")
      ->check(CLI::IsMember({"agreeable", "weak", "acceptable"}));
  bet->add_option("--verify", bet_req.verify_path, "Bet JSON file to classify instead of searching");

  PumpRequest pump_req{"weak", std::nullopt};
  auto* pump = app.add_subcommand("pump", "Build a money-pump responder and answer a prior");
  add_common(pump, c, "[respond] <file>");
  pump->add_option("--level", pump_req.level, "weak | universal | strong")
      ->check(CLI::IsMember({"weak", "universal", "strong"}));
  pump->add_option("--prior", pump_req.prior, "Distribution over states, e.g. 1/4,1/4,1/4,1/4");

  SingleRequest single_req;
  auto* single = app.add_subcommand("single", "Conglomerability, disintegrability and money pump for one player");
  add_common(single, c, "[audit] <file>");
  single->add_option("--prior", single_req.prior, "Distribution over states")->required();
  single->add_option("--player", single_req.player, "Player name (default: the first player)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (bet->parsed()) drop_verb(c.args, "find");
    if (pump->parsed()) drop_verb(c.args, "respond");
    if (single->parsed()) drop_verb(c.args, "audit");
    const bool one_file = bet->parsed() || pump->parsed() || single->parsed();
    if (one_file && c.args.size() != 1) {
      std::cerr << "error: expected exactly one type space file\n";
      return kInput;
    }

    std::vector<Report> reports;
    if (validate->parsed()) {
      reports = over_files(c.args, c.jobs, [&](const std::string& f) { return run_validate(f, c.out); });
    } else if (classify->parsed()) {
      reports = over_files(c.args, c.jobs, [&](const std::string& f) { return run_classify(f, c.out); });
    } else if (components->parsed()) {
      reports = over_files(c.args, c.jobs, [&](const std::string& f) { return run_components(f, c.out, players); });
    } else if (bet->parsed()) {
      reports.push_back(run_bet(c.args[0], c.out, bet_req));
    } else if (pump->parsed()) {
      reports.push_back(run_pump(c.args[0], c.out, pump_req));
    } else {
      reports.push_back(run_single(c.args[0], c.out, single_req));
    }
    return emit(reports, c.out);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
