// qgate: command-line front end for the gate builders, the two transport
// engines and the boolean compiler.
//
// Exit status: 0 success, 1 usage error, 2 computation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgate/acceptance.hpp"
#include "qgate/boolc.hpp"
#include "qgate/builders.hpp"
#include "qgate/molecules.hpp"
#include "qgate/negf.hpp"
#include "qgate/presets.hpp"
#include "qgate/scatter.hpp"
#include "qgate/sweep.hpp"

namespace {

using nlohmann::json;
using namespace qgate;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Shared settings

struct Global {
  std::string format;  // empty: command default
  std::string out;
  int threads = 1;
  bool gnuplot = false;
  LeadModel lead;
};

struct TargetOptions {
  std::string graph_file;
  std::string molecule;
  int tree_depth = 0;
  std::string bits;
  std::string expr;
  std::string assign;
  std::string gate;
  std::string preset;
  int bond_phase = 0;
  bool bit_one_disconnected = false;
  int chain_pad = -1;
  std::optional<double> center_alpha;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParameterPreset load_preset(const std::string& spec, const ParameterPreset& fallback) {
  if (spec.empty()) return fallback;
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return preset_by_name(spec);
  if (!std::filesystem::exists(spec)) {
    throw UsageError("unknown preset '" + spec + "' (expected uniform, huckel or a JSON file)");
  }
  ParameterPreset p = preset_from_json(read_file(spec));
  validate_preset(p);
  return p;
}

std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c - '0');
    } else if (c != ',' && c != ' ') {
      throw UsageError("bits must be a string of 0 and 1, got '" + text + "'");
    }
  }
  return bits;
}

std::map<std::string, int> parse_assignment(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (eq == std::string::npos || (value != "0" && value != "1")) {
      throw UsageError("assignment entries look like name=0 or name=1, got '" + item + "'");
    }
    out[item.substr(0, eq)] = value == "1";
  }
  return out;
}

/// "(x1 NAND x2) NAND (x3 NAND x4)" style expression for a perfect tree.
std::string nand_tree_expression(int depth) {
  if (depth < 1 || depth > 4) throw UsageError("--tree depth must be 1..4 for expressions");
  int next = 1;
  std::function<std::string(int)> gate = [&](int level) -> std::string {
    if (level == 0) return "x" + std::to_string(next++);
    const std::string a = gate(level - 1);
    const std::string b = gate(level - 1);
    return level == 1 ? a + " NAND " + b : "(" + a + ") NAND (" + b + ")";
  };
  return gate(depth);
}

/// What to put between the electrodes.
struct Target {
  std::optional<Junction> junction;  // empty for the bare chain
  DeviceOptions device;              // used when junction is empty
  std::string description;

  DeviceRegion make(const LeadModel& lead) const {
    return junction ? junction->make(lead) : make_bare_chain(lead, device);
  }
};

void apply_device_overrides(const TargetOptions& t, DeviceOptions& d) {
  if (t.chain_pad >= 0) d.chain_pad = t.chain_pad;
  if (t.center_alpha) d.center_alpha = t.center_alpha;
}

BuildOptions build_options(const TargetOptions& t) {
  BuildOptions b;
  b.bond_phase = t.bond_phase;
  b.bit_one_disconnected = t.bit_one_disconnected;
  return b;
}

Target make_target(const TargetOptions& t) {
  const int chosen = !t.graph_file.empty() + !t.molecule.empty() + (t.tree_depth > 0) + !t.expr.empty() +
                     !t.gate.empty();
  if (chosen != 1) {
    throw UsageError("choose exactly one of --graph, --molecule, --tree, --expr, --gate");
  }
  Target target;
  if (!t.molecule.empty()) {
    const ParameterPreset preset = load_preset(t.preset, ParameterPreset::huckel());
    const std::string& m = t.molecule;
    if (m == "chain") {
      target.description = "bare chain";
      apply_device_overrides(t, target.device);
      return target;
    }
    if (m.rfind("tree-", 0) == 0) {
      target.junction = third_generation_molecule(third_generation_from_string(m.substr(5)), preset);
    } else if (m.rfind("nand-", 0) == 0 && m.size() == 7) {
      const auto bits = parse_bits(m.substr(5));
      target.junction = first_generation_molecule(bits[0], bits[1], preset);
    } else {
      throw UsageError("unknown molecule '" + m + "' (chain, tree-a, tree-b, tree-c, nand-00, nand-01, nand-11)");
    }
  } else {
    const ParameterPreset preset = load_preset(t.preset, ParameterPreset::uniform());
    Junction j;
    if (!t.graph_file.empty()) {
      j.graph = deserialize(read_file(t.graph_file));
      j.description = t.graph_file;
    } else if (t.tree_depth > 0) {
      j.graph = build_nand_tree(t.tree_depth, parse_bits(t.bits), preset, build_options(t));
      j.description = "depth-" + std::to_string(t.tree_depth) + " tree";
    } else if (!t.gate.empty()) {
      j.graph = build_gate(gate_kind_from_string(t.gate), parse_bits(t.bits), preset, build_options(t));
      j.description = t.gate + " gate";
    } else {
      const auto e = boolc::parse(t.expr);
      const auto circuit = boolc::lower(*e);
      const auto named = parse_assignment(t.assign);
      std::vector<int> assignment;
      for (const auto& v : circuit.variables) {
        auto it = named.find(v);
        if (it == named.end()) throw UsageError("no value for variable '" + v + "' (use --assign)");
        assignment.push_back(it->second);
      }
      j.graph = circuit.instantiate(assignment, preset, build_options(t));
      j.description = boolc::pretty(*e);
    }
    target.junction = std::move(j);
  }
  apply_device_overrides(t, target.junction->device);
  target.description = target.junction->description;
  return target;
}

void add_target_options(CLI::App* cmd, TargetOptions& t) {
  cmd->add_option("--graph", t.graph_file, "Graph document (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--molecule", t.molecule, "Built-in junction: chain, tree-a, tree-b, tree-c, nand-00, nand-01, nand-11");
  cmd->add_option("--tree", t.tree_depth, "NAND tree of this depth (with --bits)")->check(CLI::Range(1, 12));
  cmd->add_option("--gate", t.gate, "Single gate: not, and, or, nand (with --bits)");
  cmd->add_option("--bits", t.bits, "Input bits, e.g. 00011011");
  cmd->add_option("--expr", t.expr, "Boolean expression (with --assign)");
  cmd->add_option("--assign", t.assign, "Variable values, e.g. a=1,b=0");
  cmd->add_option("--preset", t.preset, "uniform, huckel or a preset JSON file");
  cmd->add_option("--bond-phase", t.bond_phase, "Bond alternation phase for built trees");
  cmd->add_flag("--bit-one-disconnected", t.bit_one_disconnected, "Encode bit 1 as a missing pendant");
  cmd->add_option("--chain-pad", t.chain_pad, "Explicit chain sites on each side")->check(CLI::NonNegativeNumber);
  cmd->add_option("--center-alpha", t.center_alpha, "On-site energy of chain site r=0");
}

// ---------------------------------------------------------------------------
// Output

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

class Output {
 public:
  explicit Output(const Global& g) : path_(g.out) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw std::runtime_error("cannot write '" + path_ + "'");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

 private:
  std::string path_;
  std::ofstream file_;
};

std::string format_of(const Global& g, const std::string& fallback) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

void write_gnuplot(const Global& g, const std::string& xlabel, int xcol, int ycol) {
  if (!g.gnuplot) return;
  const std::string script = g.out + ".gp";
  std::ofstream gp(script);
  if (!gp) throw std::runtime_error("cannot write '" + script + "'");
  gp << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel '" << xlabel << "'\n"
     << "set ylabel 'T'\n"
     << "set logscale y\n"
     << "set format y '10^{%L}'\n"
     << "plot '" << std::filesystem::path(g.out).filename().string() << "' using " << xcol << ":" << ycol
     << " with lines notitle\n";
}

void require_gnuplot_target(const Global& g) {
  if (g.gnuplot && g.out.empty()) throw UsageError("--gnuplot needs --out");
  if (g.gnuplot && format_of(g, "csv") != "csv") throw UsageError("--gnuplot needs CSV output");
}

// ---------------------------------------------------------------------------
// compile

struct CompileOptions {
  std::string expr;
  std::string preset;
  std::string assign;
  int bond_phase = 0;
  bool bit_one_disconnected = false;
};

int cmd_compile(const Global& g, const CompileOptions& o) {
  if (g.gnuplot) throw UsageError("--gnuplot applies to transmit and sweep");
  const auto e = boolc::parse(o.expr);
  const auto circuit = boolc::lower(*e);
  const auto named = parse_assignment(o.assign);
  std::vector<int> assignment;
  for (const auto& v : circuit.variables) {
    auto it = named.find(v);
    assignment.push_back(it == named.end() ? 0 : it->second);
  }
  BuildOptions b;
  b.bond_phase = o.bond_phase;
  b.bit_one_disconnected = o.bit_one_disconnected;
  TightBindingGraph graph = circuit.instantiate(assignment, load_preset(o.preset, ParameterPreset::uniform()), b);
  graph.meta()["expression"] = boolc::pretty(*e);
  graph.meta()["slots"] = std::to_string(circuit.slot_variable.size());
  for (std::size_t s = 0; s < circuit.slot_variable.size(); ++s) {
    graph.meta()["slot:" + std::to_string(s)] =
        circuit.slot_variable[s] ? *circuit.slot_variable[s] : std::to_string(circuit.slot_constant[s]);
  }

  Output out(g);
  if (format_of(g, "json") == "json") {
    out.stream() << serialize(graph) << "\n";
  } else {
    out.stream() << "record,i,j,value,label\n";
    for (const Site& s : graph.sites()) {
      out.stream() << "site," << s.id << ",," << num(s.alpha) << "," << s.label << "\n";
    }
    for (const Bond& bd : graph.bonds()) {
      out.stream() << "bond," << bd.i << "," << bd.j << "," << num(bd.beta) << ",\n";
    }
    out.stream() << "root," << graph.root() << ",," << num(graph.root_coupling()) << ",\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// truth-table

struct TruthOptions {
  std::string expr;
  int tree_depth = 0;
  std::string bits;
  std::string graph_file;
  std::string engine = "qst";
  std::string mode = "numeric";
  std::string preset;
  int bond_phase = 0;
  bool bit_one_disconnected = false;
  double on = 0.1;
  double off = 0.01;
  int chain_pad = -1;
};

std::string bit_text(BitValue b) {
  return b == BitValue::One ? "1" : b == BitValue::Zero ? "0" : "indeterminate";
}

int cmd_truth_table(const Global& g, const TruthOptions& o) {
  if (g.gnuplot) throw UsageError("--gnuplot applies to transmit and sweep");
  const int chosen = !o.expr.empty() + (o.tree_depth > 0) + !o.graph_file.empty();
  if (chosen != 1) throw UsageError("give exactly one of EXPR, --tree, --graph");
  if (o.engine != "qst" && o.engine != "negf" && o.engine != "both") {
    throw UsageError("--engine must be qst, negf or both");
  }
  if (!(o.off >= 0.0 && o.off < o.on)) throw UsageError("thresholds need 0 <= --off < --on");

  boolc::TruthTableOptions base;
  base.preset = load_preset(o.preset, ParameterPreset::uniform());
  base.build.bond_phase = o.bond_phase;
  base.build.bit_one_disconnected = o.bit_one_disconnected;
  base.lead = g.lead;
  if (o.chain_pad >= 0) base.device.chain_pad = o.chain_pad;
  base.thresholds = {o.on, o.off};
  base.threads = g.threads;
  if (o.mode == "exact") {
    base.mode = ClassifyMode::Exact;
  } else if (o.mode != "numeric") {
    throw UsageError("--mode must be numeric or exact");
  }
  const bool want_qst = o.engine != "negf";
  const bool want_negf = o.engine != "qst";

  // Rows: assignment, qst bit, negf bit, T, oracle (-1 when unknown).
  struct Row {
    std::vector<int> assignment;
    std::optional<BitValue> qst, negf;
    std::optional<double> T;
    int oracle = -1;
  };
  std::vector<std::string> variables;
  std::vector<Row> rows;

  if (!o.graph_file.empty()) {
    const TightBindingGraph graph = deserialize(read_file(o.graph_file));
    Row r;
    if (want_qst) r.qst = classify_bit(graph, base.mode).value;
    if (want_negf) {
      r.T = transmission_negf(make_device(graph, base.lead, base.device), base.lead, 0.0).T;
      r.negf = *r.T >= o.on ? BitValue::One : *r.T <= o.off ? BitValue::Zero : BitValue::Indeterminate;
    }
    rows.push_back(r);
  } else {
    const auto e = boolc::parse(o.expr.empty() ? nand_tree_expression(o.tree_depth) : o.expr);
    const auto circuit = boolc::lower(*e);
    variables = circuit.variables;
    std::optional<boolc::TruthTable> qst, negf;
    auto run = [&](boolc::Engine engine) {
      boolc::TruthTableOptions opt = base;
      opt.engine = engine;
      if (o.bits.empty()) return boolc::truth_table(circuit, *e, opt);
      // A single assignment, given as one bit per variable.
      const auto bits = parse_bits(o.bits);
      if (bits.size() != variables.size()) {
        throw UsageError("--bits needs " + std::to_string(variables.size()) + " values");
      }
      boolc::TruthTable t;
      t.variables = variables;
      boolc::TruthRow row;
      row.assignment = bits;
      std::map<std::string, int> named;
      for (std::size_t k = 0; k < bits.size(); ++k) named[variables[k]] = bits[k];
      row.oracle = boolc::evaluate(*e, named);
      const auto graph = circuit.instantiate(bits, opt.preset, opt.build);
      if (engine == boolc::Engine::Qst) {
        row.output = classify_bit(graph, opt.mode).value;
      } else {
        row.transmission = transmission_negf(make_device(graph, opt.lead, opt.device), opt.lead, 0.0).T;
        row.output = *row.transmission >= o.on    ? BitValue::One
                     : *row.transmission <= o.off ? BitValue::Zero
                                                  : BitValue::Indeterminate;
      }
      t.rows.push_back(row);
      return t;
    };
    if (want_qst) qst = run(boolc::Engine::Qst);
    if (want_negf) negf = run(boolc::Engine::Negf);
    const auto& any = qst ? *qst : *negf;
    for (std::size_t k = 0; k < any.rows.size(); ++k) {
      Row r;
      r.assignment = any.rows[k].assignment;
      r.oracle = any.rows[k].oracle;
      if (qst) r.qst = qst->rows[k].output;
      if (negf) {
        r.negf = negf->rows[k].output;
        r.T = negf->rows[k].transmission;
      }
      rows.push_back(r);
    }
  }

  Output out(g);
  if (format_of(g, "csv") == "csv") {
    auto& os = out.stream();
    for (const auto& v : variables) os << v << ",";
    if (want_qst) os << "qst,";
    if (want_negf) os << "negf,T_negf,";
    os << "oracle\n";
    for (const auto& r : rows) {
      for (int b : r.assignment) os << b << ",";
      if (want_qst) os << bit_text(*r.qst) << ",";
      if (want_negf) os << bit_text(*r.negf) << "," << num(*r.T) << ",";
      os << (r.oracle < 0 ? std::string() : std::to_string(r.oracle)) << "\n";
    }
  } else {
    json doc{{"variables", variables}, {"rows", json::array()}};
    for (const auto& r : rows) {
      json row{{"assignment", r.assignment}};
      if (want_qst) row["qst"] = bit_text(*r.qst);
      if (want_negf) {
        row["negf"] = bit_text(*r.negf);
        row["T_negf"] = *r.T;
      }
      if (r.oracle >= 0) row["oracle"] = r.oracle;
      doc["rows"].push_back(row);
    }
    out.stream() << doc.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transmit

struct GridOptions {
  double emin = -2.0;
  double emax = 2.0;
  int count = 1001;
  std::vector<double> energies;
};

std::vector<double> energy_grid(const GridOptions& o) {
  if (!o.energies.empty()) return o.energies;
  if (o.count < 1) throw UsageError("energy grid needs at least one point");
  if (!(o.emin <= o.emax)) throw UsageError("--emin must not exceed --emax");
  return linspace(o.emin, o.emax, static_cast<std::size_t>(o.count));
}

int cmd_transmit(const Global& g, const TargetOptions& t, const GridOptions& grid, const std::string& engine) {
  require_gnuplot_target(g);
  const Target target = make_target(t);
  const auto energies = energy_grid(grid);
  std::vector<TransmissionPoint> points;
  if (engine == "negf") {
    points = transmission_sweep(target.make(g.lead), g.lead, energies, g.threads);
  } else if (engine == "qst") {
    if (!target.junction || !target.junction->device.backbone.empty()) {
      throw UsageError("the scattering engine needs a tree attached directly to the chain");
    }
    const auto& graph = target.junction->graph;
    points = parallel_map(energies.size(), g.threads, [&](std::size_t k) {
      return TransmissionPoint{energies[k], transmission_qst(graph, energies[k], g.lead).T};
    });
  } else {
    throw UsageError("--engine must be qst or negf");
  }

  Output out(g);
  if (format_of(g, "csv") == "csv") {
    out.stream() << "E,T\n";
    for (const auto& p : points) out.stream() << num(p.energy) << "," << num(p.T) << "\n";
  } else {
    json doc{{"target", target.description}, {"engine", engine}, {"points", json::array()}};
    for (const auto& p : points) doc["points"].push_back({{"E", p.energy}, {"T", p.T}});
    out.stream() << doc.dump(2) << "\n";
  }
  write_gnuplot(g, "E [eV]", 1, 2);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  std::string variable;
  double from = 0.0;
  double to = 0.0;
  int count = -1;
  std::vector<double> values;
  double energy = 0.0;
};

int cmd_sweep(const Global& g, const TargetOptions& t, const SweepOptions& o) {
  require_gnuplot_target(g);
  SweepSpec spec;
  spec.variable = o.variable;
  spec.fixed_energy = o.energy;
  if (!o.values.empty()) {
    spec.values = o.values;
  } else {
    if (o.count < 1) throw UsageError("sweep grid is empty (use --values or --from/--to/--count)");
    spec.values = linspace(o.from, o.to, static_cast<std::size_t>(o.count));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Target target = make_target(t);
  std::vector<SweepPoint> points;
  if (!target.junction) {
    if (spec.variable != "energy") throw UsageError("the bare chain only supports energy sweeps");
    const auto tp = transmission_sweep(target.make(g.lead), g.lead, spec.values, g.threads);
    for (const auto& p : tp) points.push_back({p.energy, p.energy, p.T});
  } else {
    points = run_sweep(*target.junction, g.lead, spec, g.threads);
  }

  Output out(g);
  if (format_of(g, "csv") == "csv") {
    out.stream() << spec.variable << ",E,T\n";
    for (const auto& p : points) out.stream() << num(p.value) << "," << num(p.energy) << "," << num(p.T) << "\n";
  } else {
    json doc{{"target", target.description}, {"variable", spec.variable}, {"points", json::array()}};
    for (const auto& p : points) doc["points"].push_back({{spec.variable, p.value}, {"E", p.energy}, {"T", p.T}});
    out.stream() << doc.dump(2) << "\n";
  }
  write_gnuplot(g, spec.variable, 1, 3);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  bool list = false;
  std::string preset_file;
  std::vector<int> only;
};

int cmd_verify(const Global& g, const VerifyOptions& o) {
  if (g.gnuplot) throw UsageError("--gnuplot applies to transmit and sweep");
  const std::string format = format_of(g, "csv");
  Output out(g);
  auto& os = out.stream();
  if (o.list) {
    if (format == "json") {
      json doc = json::array();
      for (const auto& c : acceptance::criteria()) {
        doc.push_back({{"id", c.id}, {"title", c.title}, {"anchor", c.anchor}});
      }
      os << doc.dump(2) << "\n";
    } else {
      for (const auto& c : acceptance::criteria()) os << "[" << c.id << "] " << c.title << ": " << c.anchor << "\n";
    }
    return 0;
  }

  acceptance::Config config;
  config.threads = g.threads;
  if (!o.preset_file.empty()) {
    const ParameterPreset p = preset_from_json(read_file(o.preset_file));
    const auto violations = preset_violations(p);
    if (!violations.empty()) {
      std::cerr << "preset '" << p.name << "' fails coupling-sign validation:\n";
      for (const auto& v : violations) std::cerr << "  " << v << "\n";
      os << "FAIL [preset] coupling-sign validation -- " << violations.size() << " violation(s)\n";
      return 2;
    }
    config.molecular = p;
  }

  std::vector<int> ids = o.only;
  if (ids.empty()) {
    for (const auto& c : acceptance::criteria()) ids.push_back(c.id);
  }
  int failed = 0;
  json doc = json::array();
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(acceptance::criteria().size())) {
      throw UsageError("no criterion " + std::to_string(id));
    }
    const auto r = acceptance::run(id, config);
    failed += !r.passed;
    if (format == "json") {
      doc.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      os << acceptance::format(r) << "\n" << std::flush;
    }
  }
  if (format == "json") os << doc.dump(2) << "\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum logic gates on tight-binding graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags take precedence");

  Global global;
  app.add_option("--format", global.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", global.out, "Write output to this file instead of standard output");
  app.add_option("--threads", global.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--gnuplot", global.gnuplot, "Also write OUT.gp, a gnuplot script for the data");
  app.add_option("--alpha-lead", global.lead.alpha_lead, "Lead site energy [eV]");
  app.add_option("--beta-lead", global.lead.beta_lead, "Lead hopping [eV]");
  app.add_option("--gamma", global.lead.gamma, "Device-lead coupling [eV]");
  app.add_option("--eta", global.lead.eta, "Green's-function broadening [eV]");

  CompileOptions compile;
  auto* c = app.add_subcommand("compile", "Compile a boolean expression into a gate graph document");
  c->add_option("expr", compile.expr, "Expression, e.g. \"a NAND b\"")->required();
  c->add_option("--preset", compile.preset, "uniform, huckel or a preset JSON file");
  c->add_option("--assign", compile.assign, "Input values for the emitted graph (default all 0)");
  c->add_option("--bond-phase", compile.bond_phase, "Bond alternation phase");
  c->add_flag("--bit-one-disconnected", compile.bit_one_disconnected, "Encode bit 1 as a missing pendant");

  TruthOptions truth;
  auto* tt = app.add_subcommand("truth-table", "Enumerate gate outputs and compare with classical logic");
  tt->add_option("expr", truth.expr, "Expression");
  tt->add_option("--tree", truth.tree_depth, "NAND tree of this depth instead of an expression")
      ->check(CLI::Range(1, 4));
  tt->add_option("--bits", truth.bits, "Evaluate a single input vector");
  tt->add_option("--graph", truth.graph_file, "Classify one graph document")->check(CLI::ExistingFile);
  tt->add_option("--engine", truth.engine, "qst, negf or both");
  tt->add_option("--mode", truth.mode, "Classifier for qst: numeric or exact");
  tt->add_option("--preset", truth.preset, "uniform, huckel or a preset JSON file");
  tt->add_option("--bond-phase", truth.bond_phase, "Bond alternation phase");
  tt->add_flag("--bit-one-disconnected", truth.bit_one_disconnected, "Encode bit 1 as a missing pendant");
  tt->add_option("--on", truth.on, "negf: T at or above this reads as 1");
  tt->add_option("--off", truth.off, "negf: T at or below this reads as 0");
  tt->add_option("--chain-pad", truth.chain_pad, "negf: explicit chain sites per side")
      ->check(CLI::NonNegativeNumber);

  TargetOptions transmit_target;
  GridOptions grid;
  std::string transmit_engine = "negf";
  auto* tr = app.add_subcommand("transmit", "Transmission T(E) over an energy grid");
  add_target_options(tr, transmit_target);
  tr->add_option("--emin", grid.emin, "Lowest energy [eV]");
  tr->add_option("--emax", grid.emax, "Highest energy [eV]");
  tr->add_option("--count", grid.count, "Number of grid points");
  tr->add_option("--energies", grid.energies, "Explicit energies [eV] (overrides the grid)")->delimiter(',');
  tr->add_option("--engine", transmit_engine, "negf or qst");

  TargetOptions sweep_target;
  SweepOptions sweep;
  auto* sw = app.add_subcommand("sweep", "Transmission while one parameter varies");
  add_target_options(sw, sweep_target);
  sw->add_option("--var", sweep.variable, "energy, alpha_N, beta_NC, root_coupling, site:<id>, bond:<i>-<j>")
      ->required();
  sw->add_option("--from", sweep.from, "First value");
  sw->add_option("--to", sweep.to, "Last value");
  sw->add_option("--count", sweep.count, "Number of values");
  sw->add_option("--values", sweep.values, "Explicit values")->delimiter(',');
  sw->add_option("--energy", sweep.energy, "Fixed energy for parameter sweeps [eV]");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run the acceptance checks");
  v->add_flag("--list", verify.list, "List the criteria and exit");
  v->add_option("--preset", verify.preset_file, "Preset JSON for the molecular checks")->check(CLI::ExistingFile);
  v->add_option("--criterion", verify.only, "Run only these criteria")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    global.lead.validate();
    if (*c) return cmd_compile(global, compile);
    if (*tt) return cmd_truth_table(global, truth);
    if (*tr) return cmd_transmit(global, transmit_target, grid, transmit_engine);
    if (*sw) return cmd_sweep(global, sweep_target, sweep);
    if (*v) return cmd_verify(global, verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const boolc::ParseError& e) {
    std::cerr << "error: parse error at " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
