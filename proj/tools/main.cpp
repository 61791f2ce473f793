// nfrob command-line tool. All computation happens behind the C API of the
// shared library; this file only parses arguments, shapes flags into JSON and
// renders reports.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfrob.h"

namespace {

using nlohmann::json;

struct CliFlags {
  std::string spec_path;
  std::string format = "json";
  unsigned trials = 32;
  std::uint64_t seed = 0xF506;
  std::uint64_t height = std::uint64_t{1} << 16;
  bool deterministic = false;
  std::string epsilon;
  std::string which = "twist";
  bool all_generators = false;
  std::int64_t generator = -1;
  bool check_central = false;
};

std::string flags_json(const std::string& command, const CliFlags& f) {
  json j;
  j["trials"] = f.trials;
  j["seed"] = f.seed;
  j["height"] = f.height;
  j["deterministic"] = f.deterministic;
  if (!f.epsilon.empty()) j["epsilon"] = f.epsilon;
  if (command == "ybe") j["which"] = f.which;
  if (f.all_generators) j["all_generators"] = true;
  if (f.generator >= 0) j["generator"] = static_cast<std::uint64_t>(f.generator);
  if (f.check_central) j["check_central"] = true;
  return j.dump();
}

bool use_color() {
  if (std::getenv("NO_COLOR")) return false;
  return isatty(fileno(stdout));
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

void render_text(const json& report, std::ostream& os) {
  os << "command: " << report["command"].get<std::string>() << "\n";
  if (report.contains("input_digest"))
    os << "input: " << report["input_digest"].get<std::string>() << "\n";
  if (report.contains("ring"))
    os << "ring: " << report["ring"].get<std::string>()
       << "  dim: " << report["dim"] << "\n";
  if (report.contains("error")) {
    os << paint("error", "31") << ": "
       << report["error"]["code"].get<std::string>() << " — "
       << report["error"]["message"].get<std::string>() << "\n";
    return;
  }
  for (const json& v : report["verdicts"]) {
    os << "verdict " << v["name"].get<std::string>() << ": ";
    if (v.contains("pass")) {
      os << (v["pass"].get<bool>() ? paint("pass", "32") : paint("FAIL", "31"));
      if (!v["certified"].get<bool>()) {
        os << " (probabilistic";
        if (v.contains("failure_bound"))
          os << ", failure bound " << v["failure_bound"].get<std::string>();
        os << ")";
      }
    } else {
      os << v["value"];
    }
    os << "\n";
  }
  os << "all_pass: " << (report["all_pass"].get<bool>() ? "true" : "false")
     << "\n";
  if (report.contains("timing_ms"))
    os << "timing: " << report["timing_ms"].get<double>() << " ms\n";
}

int emit_error(const std::string& command, nf_status status,
               const std::string& format) {
  json out;
  out["schema"] = "nfrob-report/1";
  out["command"] = command;
  out["error"]["code"] = nf_status_name(status);
  out["error"]["message"] = nf_last_error();
  out["all_pass"] = false;
  if (format == "text")
    render_text(out, std::cout);
  else
    std::cout << out.dump(2) << "\n";
  std::cerr << "nfrob: " << nf_status_name(status) << ": " << nf_last_error()
            << "\n";
  return 2;
}

int run(const std::string& command, const CliFlags& f) {
  char* report_text = nullptr;
  nf_status status = nf_run_command_file(
      command.c_str(), f.spec_path.c_str(), flags_json(command, f).c_str(),
      &report_text);
  if (status != NF_OK) return emit_error(command, status, f.format);
  json report = json::parse(report_text);
  nf_string_free(report_text);
  if (f.format == "text")
    render_text(report, std::cout);
  else
    std::cout << report.dump(2) << "\n";
  bool all_pass = report["all_pass"].get<bool>();
  if (!all_pass)
    std::cerr << "nfrob: a mathematical verdict failed (see report)\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nfrob — nearly Frobenius structures and quantum Yang-Baxter solutions "
      "for finite-dimensional algebras, exactly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nf_version()));

  CliFlags f;
  std::string command;

  auto add_common = [&](CLI::App* sub, bool search_flags, bool epsilon_flag) {
    sub->add_option("spec", f.spec_path, "algebra description file (JSON)")
        ->required();
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    if (search_flags) {
      sub->add_option("--trials", f.trials, "randomized nondegeneracy trials")
          ->capture_default_str();
      sub->add_option("--seed", f.seed, "base seed for the trial generators")
          ->capture_default_str();
      sub->add_option("--height", f.height,
                      "samples per trace coefficient (Schwartz-Zippel set size)")
          ->capture_default_str();
      sub->add_flag("--deterministic", f.deterministic,
                    "exact grid certification (dimension <= 8)");
    }
    if (epsilon_flag)
      sub->add_option("--epsilon", f.epsilon,
                      "trace coefficients, comma separated (mandatory over Z)");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  add_common(app.add_subcommand("validate",
                                "check associativity and unit of the table"),
             false, false);
  CLI::App* central = app.add_subcommand(
      "central-basis", "canonical basis of the A-central elements of A(x)A");
  add_common(central, false, false);
  central->add_flag("--check-central", f.check_central,
                    "re-ingest every generator and re-verify centrality");
  add_common(app.add_subcommand("frobdim", "dimension of the Frobenius space"),
             false, false);
  add_common(app.add_subcommand("frobenius-check",
                                "search or check a nondegenerate trace"),
             true, true);
  add_common(app.add_subcommand("frobenius-data",
                                "dual basis, coproduct and Nakayama data"),
             true, true);
  add_common(app.add_subcommand("theorem-a",
                                "verify that E_A = A * q0, free of rank one"),
             true, true);
  CLI::App* ybe = app.add_subcommand(
      "ybe", "verify Yang-Baxter / eq-2 identities for central tensors");
  add_common(ybe, true, true);
  ybe->add_option("--which", f.which, "operator family: R = Q tau or R = mult-by-Q")
      ->check(CLI::IsMember({"mult", "twist"}))
      ->capture_default_str();
  ybe->add_flag("--all-generators", f.all_generators,
                "run every canonical central generator (default)");
  ybe->add_option("--generator", f.generator,
                  "run one canonical central generator by index");
  CLI::App* ar = app.add_subcommand(
      "ar", "the commutant algebra A(R) and the monomorphism i : A -> A(R)");
  add_common(ar, true, true);
  ar->add_option("--generator", f.generator,
                 "build R from one canonical central generator");

  CLI11_PARSE(app, argc, argv);
  return run(command, f);
}
