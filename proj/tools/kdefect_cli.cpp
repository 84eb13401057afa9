#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdefect/graph.hpp"
#include "kdefect/oracle.hpp"
#include "kdefect/solver.hpp"

using nlohmann::ordered_json;
using namespace kdefect;

namespace {

constexpr const char* kVersion = "0.1.0";

const char* second_order_name(SecondOrder o) {
	switch (o) {
		case SecondOrder::memory: return "memory";
		case SecondOrder::random: return "random";
		case SecondOrder::s_ord: return "s_ord";
		case SecondOrder::s_rev: return "s_rev";
		case SecondOrder::peel_ord: return "peel_ord";
		case SecondOrder::peel_rev: return "peel_rev";
	}
	return "memory";
}

SecondOrder parse_second_order(const std::string& s) {
	if (s == "memory") return SecondOrder::memory;
	if (s == "random") return SecondOrder::random;
	if (s == "s_ord") return SecondOrder::s_ord;
	if (s == "s_rev") return SecondOrder::s_rev;
	if (s == "peel_ord") return SecondOrder::peel_ord;
	if (s == "peel_rev") return SecondOrder::peel_rev;
	throw std::invalid_argument("unknown second-coloring order: " + s);
}

GraphFormat parse_format(const std::string& s) {
	if (s == "edge_list") return GraphFormat::edge_list;
	if (s == "dimacs") return GraphFormat::dimacs;
	throw std::invalid_argument("unknown graph format: " + s);
}

// Raw flag values shared by solve and bench; turned into a SolverConfig
// after validation so conflicting flags surface as usage errors.
struct ConfigFlags {
	std::string bound = "double";
	std::string branch = "bs-three";
	bool no_early_term = false;
	std::string second_order = "memory";
	double time_limit_s = 0.0;
	std::uint64_t seed = 0;
};

SolverConfig to_solver_config(int k, const ConfigFlags& f) {
	SolverConfig cfg;
	cfg.k = k;
	cfg.bound = f.bound == "double" ? BoundKind::double_coloring : BoundKind::single_coloring;
	cfg.branching = f.branch == "bs-three" ? BranchingRule::bs_three : BranchingRule::baseline;
	cfg.early_termination = !f.no_early_term;
	cfg.second_order = parse_second_order(f.second_order);
	cfg.seed = f.seed;
	if (f.time_limit_s < 0) throw std::invalid_argument("time limit must be nonnegative");
	cfg.time_limit = std::chrono::milliseconds(std::llround(f.time_limit_s * 1000.0));
	cfg.validate();
	return cfg;
}

// Named ablation presets for the benchmark grid.
std::optional<SolverConfig> variant_config(const std::string& name, int k, const ConfigFlags& base) {
	SolverConfig cfg;
	cfg.k = k;
	cfg.second_order = parse_second_order(base.second_order);
	cfg.seed = base.seed;
	cfg.time_limit = std::chrono::milliseconds(std::llround(base.time_limit_s * 1000.0));
	if (name == "full") {
		cfg.bound = BoundKind::double_coloring;
		cfg.branching = BranchingRule::bs_three;
		cfg.early_termination = true;
	} else if (name == "single-ub") {
		cfg.bound = BoundKind::single_coloring;
		cfg.branching = BranchingRule::bs_three;
		cfg.early_termination = true;
	} else if (name == "plain-branch") {
		cfg.bound = BoundKind::double_coloring;
		cfg.branching = BranchingRule::baseline;
		cfg.early_termination = false;
	} else if (name == "plain") {
		cfg.bound = BoundKind::single_coloring;
		cfg.branching = BranchingRule::baseline;
		cfg.early_termination = false;
	} else {
		return std::nullopt;
	}
	cfg.validate();
	return cfg;
}

ordered_json config_json(const SolverConfig& cfg, const std::string& variant) {
	ordered_json j;
	j["bound"] = cfg.bound == BoundKind::double_coloring ? "double" : "single";
	j["branch"] = cfg.branching == BranchingRule::bs_three ? "bs-three" : "baseline";
	j["early_termination"] = cfg.early_termination;
	j["second_order"] = second_order_name(cfg.second_order);
	j["seed"] = cfg.seed;
	j["time_limit_ms"] = static_cast<long long>(cfg.time_limit.count());
	if (!variant.empty()) j["variant"] = variant;
	return j;
}

ordered_json run_record(const std::string& graph_name, const Graph& g, int k,
                        const SolverConfig& cfg, const std::string& variant,
                        const SolveReport& rep) {
	ordered_json j;
	j["graph_name"] = graph_name;
	j["n"] = g.n;
	j["m"] = g.m;
	j["k"] = k;
	j["config"] = config_json(cfg, variant);
	j["best_size"] = rep.best.size();
	j["wall_time_ms"] = static_cast<long long>(rep.wall_time.count());
	j["branches_explored"] = rep.branches_explored;
	j["ir_calls"] = rep.ir_calls;
	j["bound_prunes"] = rep.bound_prunes;
	j["timed_out"] = rep.timed_out;
	j["solver_version"] = kVersion;
	return j;
}

std::string file_display_name(const std::string& path) {
	std::string name = std::filesystem::path(path).filename().string();
	return name.empty() ? path : name;
}

std::optional<Graph> try_load(const std::string& path, GraphFormat fmt, std::string& error) {
	try {
		return load_graph(path, fmt);
	} catch (const std::exception& e) {
		error = e.what();
		return std::nullopt;
	}
}

int cmd_solve(const std::string& input, const std::string& format, int k,
              const ConfigFlags& flags, bool emit_solution) {
	SolverConfig cfg;
	GraphFormat fmt;
	try {
		fmt = parse_format(format);
		cfg = to_solver_config(k, flags);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	std::string load_error;
	std::optional<Graph> g = try_load(input, fmt, load_error);
	if (!g) {
		std::cerr << "error: cannot load " << input << ": " << load_error << "\n";
		return 1;
	}
	SolveReport rep = solve(*g, cfg);
	ordered_json rec = run_record(file_display_name(input), *g, k, cfg, "", rep);
	if (emit_solution) {
		std::vector<long long> labels;
		labels.reserve(rep.best.vertices.size());
		for (int v : rep.best.vertices) labels.push_back(g->labels[v]);
		rec["solution"] = labels;
	}
	std::cout << rec.dump() << "\n";
	return rep.timed_out ? 2 : 0;
}

int cmd_oracle(const std::string& input, const std::string& format, int k) {
	GraphFormat fmt;
	try {
		fmt = parse_format(format);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	std::string load_error;
	std::optional<Graph> g = try_load(input, fmt, load_error);
	if (!g) {
		std::cerr << "error: cannot load " << input << ": " << load_error << "\n";
		return 1;
	}
	std::vector<int> best;
	try {
		best = brute_force_max_kdc(*g, k);
	} catch (const OracleSizeError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	std::vector<long long> labels;
	labels.reserve(best.size());
	for (int v : best) labels.push_back(g->labels[v]);
	ordered_json j;
	j["graph_name"] = file_display_name(input);
	j["n"] = g->n;
	j["m"] = g->m;
	j["k"] = k;
	j["best_size"] = static_cast<int>(best.size());
	j["solution"] = labels;
	std::cout << j.dump() << "\n";
	return 0;
}

int cmd_roots(int single_k, const std::string& range) {
	int lo = 0, hi = 0;
	if (!range.empty()) {
		auto dots = range.find("..");
		if (dots == std::string::npos) {
			std::cerr << "error: --k-range expects A..B\n";
			return 1;
		}
		try {
			lo = std::stoi(range.substr(0, dots));
			hi = std::stoi(range.substr(dots + 2));
		} catch (const std::exception&) {
			std::cerr << "error: --k-range expects integer endpoints\n";
			return 1;
		}
	} else {
		lo = hi = single_k;
	}
	if (lo < 1 || hi < lo || hi > 64) {
		std::cerr << "error: k must lie in [1, 64]\n";
		return 1;
	}
	ordered_json out = ordered_json::array();
	for (int k = lo; k <= hi; ++k) {
		RootResult r = characteristic_roots(k);
		ordered_json j;
		j["k"] = k;
		j["lambda"] = r.lambda();
		j["gamma"] = r.gamma();
		j["two_minus_lambda"] = r.two_minus_lambda();
		j["two_minus_gamma"] = r.two_minus_gamma();
		out.push_back(std::move(j));
	}
	std::cout << out.dump() << "\n";
	return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, ','))
		if (!cur.empty()) out.push_back(cur);
	return out;
}

struct BenchCell {
	std::string path;
	int k = 0;
	std::string variant;
};

int cmd_bench(const std::string& manifest, const std::string& format,
              const std::string& k_list, const std::string& variants,
              const ConfigFlags& base, const std::string& out_path, int jobs) {
	GraphFormat fmt;
	std::vector<int> ks;
	std::vector<std::string> variant_names = split_csv(variants);
	try {
		fmt = parse_format(format);
		for (const std::string& tok : split_csv(k_list)) ks.push_back(std::stoi(tok));
		if (ks.empty()) throw std::invalid_argument("--k-list is empty");
		for (int k : ks)
			if (k < 0) throw std::invalid_argument("k must be nonnegative");
		if (variant_names.empty()) throw std::invalid_argument("--variants is empty");
		for (const std::string& v : variant_names)
			if (!variant_config(v, 0, base))
				throw std::invalid_argument(
				    "unknown variant " + v +
				    " (expected full, single-ub, plain-branch, or plain)");
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}

	std::ifstream mf(manifest);
	if (!mf) {
		std::cerr << "error: cannot open manifest " << manifest << "\n";
		return 1;
	}
	std::vector<std::string> paths;
	std::string line;
	while (std::getline(mf, line)) {
		auto first = line.find_first_not_of(" \t\r");
		if (first == std::string::npos) continue;
		auto last = line.find_last_not_of(" \t\r");
		std::string trimmed = line.substr(first, last - first + 1);
		if (trimmed.empty() || trimmed[0] == '#') continue;
		paths.push_back(trimmed);
	}

	std::ofstream out(out_path);
	if (!out) {
		std::cerr << "error: cannot open output " << out_path << "\n";
		return 1;
	}

	// Graphs load once and are shared read-only across cells.
	std::map<std::string, std::pair<std::optional<Graph>, std::string>> graphs;
	for (const std::string& p : paths)
		if (!graphs.count(p)) {
			std::string err;
			std::optional<Graph> g = try_load(p, fmt, err);
			graphs.emplace(p, std::make_pair(std::move(g), err));
		}

	std::vector<BenchCell> cells;
	for (const std::string& p : paths)
		for (int k : ks)
			for (const std::string& v : variant_names) cells.push_back({p, k, v});

	if (const char* env = std::getenv("KDEFECT_THREADS")) {
		int cap = std::atoi(env);
		if (cap >= 1 && jobs > cap) jobs = cap;
	}
	if (jobs < 1) jobs = 1;
	if (jobs > static_cast<int>(cells.size())) jobs = static_cast<int>(cells.size());

	std::mutex out_mutex;
	std::atomic<std::size_t> next{0};
	auto worker = [&]() {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= cells.size()) return;
			const BenchCell& cell = cells[i];
			SolverConfig cfg = *variant_config(cell.variant, cell.k, base);
			const auto& [g, load_err] = graphs.at(cell.path);
			ordered_json rec;
			if (!g) {
				rec["graph_name"] = file_display_name(cell.path);
				rec["k"] = cell.k;
				rec["config"] = config_json(cfg, cell.variant);
				rec["error"] = "cannot load " + cell.path + ": " + load_err;
			} else {
				try {
					SolveReport rep = solve(*g, cfg);
					rec = run_record(file_display_name(cell.path), *g, cell.k, cfg,
					                 cell.variant, rep);
				} catch (const std::exception& e) {
					rec = ordered_json();
					rec["graph_name"] = file_display_name(cell.path);
					rec["k"] = cell.k;
					rec["config"] = config_json(cfg, cell.variant);
					rec["error"] = e.what();
				}
			}
			std::lock_guard<std::mutex> lock(out_mutex);
			out << rec.dump() << "\n";
			out.flush();
		}
	};

	if (jobs <= 1) {
		worker();
	} else {
		std::vector<std::thread> pool;
		pool.reserve(jobs);
		for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
		for (std::thread& t : pool) t.join();
	}
	std::cerr << "wrote " << cells.size() << " rows to " << out_path << "\n";
	return 0;
}

std::string csv_escape(const std::string& s) {
	if (s.find_first_of(",\"\n") == std::string::npos) return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"') out += "\"\"";
		out += c;
	}
	out += "\"";
	return out;
}

int cmd_csv(const std::string& in_path, const std::string& out_path) {
	std::ifstream in(in_path);
	if (!in) {
		std::cerr << "error: cannot open " << in_path << "\n";
		return 1;
	}
	std::ofstream out_file;
	std::ostream* out = &std::cout;
	if (!out_path.empty()) {
		out_file.open(out_path);
		if (!out_file) {
			std::cerr << "error: cannot open output " << out_path << "\n";
			return 1;
		}
		out = &out_file;
	}
	const std::vector<std::string> config_cols = {
	    "bound", "branch", "early_termination", "second_order",
	    "seed",  "time_limit_ms", "variant"};
	const std::vector<std::string> top_cols = {
	    "graph_name", "n", "m", "k", "best_size", "wall_time_ms",
	    "branches_explored", "ir_calls", "bound_prunes", "timed_out",
	    "solver_version", "error"};
	*out << "graph_name,n,m,k";
	for (const std::string& c : config_cols) *out << "," << c;
	*out << ",best_size,wall_time_ms,branches_explored,ir_calls,bound_prunes,"
	        "timed_out,solver_version,error\n";
	std::string line;
	int line_no = 0;
	auto cell = [](const ordered_json& j, const std::string& key) -> std::string {
		if (!j.contains(key)) return "";
		const auto& v = j.at(key);
		if (v.is_string()) return csv_escape(v.get<std::string>());
		return v.dump();
	};
	while (std::getline(in, line)) {
		++line_no;
		if (line.empty()) continue;
		ordered_json j = ordered_json::parse(line, nullptr, false);
		if (j.is_discarded()) {
			std::cerr << "error: line " << line_no << " is not valid JSON\n";
			return 1;
		}
		ordered_json cfg = j.contains("config") ? j["config"] : ordered_json::object();
		*out << cell(j, "graph_name") << "," << cell(j, "n") << "," << cell(j, "m")
		     << "," << cell(j, "k");
		for (const std::string& c : config_cols) *out << "," << cell(cfg, c);
		for (std::size_t i = 4; i < top_cols.size(); ++i)
			*out << "," << cell(j, top_cols[i]);
		*out << "\n";
	}
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact maximum k-defective clique solver"};
	app.require_subcommand(1);

	const std::vector<std::string> formats = {"edge_list", "dimacs"};
	const std::vector<std::string> orders = {"memory", "random", "s_ord",
	                                         "s_rev", "peel_ord", "peel_rev"};

	// solve
	auto* sc_solve = app.add_subcommand("solve", "Solve one instance, print a run record");
	std::string s_input, s_format = "edge_list";
	int s_k = 0;
	ConfigFlags s_flags;
	bool s_emit = false;
	sc_solve->add_option("--input", s_input, "Graph file")->required();
	sc_solve->add_option("--format", s_format, "Input format")->check(CLI::IsMember(formats));
	sc_solve->add_option("--k", s_k, "Allowed missing pairs")->required()->check(CLI::NonNegativeNumber);
	sc_solve->add_option("--bound", s_flags.bound, "Upper bound used for pruning")
	    ->check(CLI::IsMember({"double", "single"}));
	sc_solve->add_option("--branch", s_flags.branch, "Branching rule")
	    ->check(CLI::IsMember({"bs-three", "baseline"}));
	sc_solve->add_flag("--no-early-term", s_flags.no_early_term,
	                   "Disable the polynomial endgame solver");
	sc_solve->add_option("--second-order", s_flags.second_order,
	                     "Candidate order for the second coloring")
	    ->check(CLI::IsMember(orders));
	sc_solve->add_option("--time-limit", s_flags.time_limit_s, "Seconds, 0 = unlimited");
	sc_solve->add_option("--seed", s_flags.seed, "Seed for randomized orders");
	sc_solve->add_flag("--emit-solution", s_emit, "Append the solution's vertex labels");

	// bench
	auto* sc_bench = app.add_subcommand("bench", "Run a (graph, k, variant) grid to JSONL");
	std::string b_manifest, b_format = "edge_list", b_klist, b_variants = "full,single-ub,plain-branch,plain", b_out;
	ConfigFlags b_flags;
	int b_jobs = 1;
	sc_bench->add_option("--manifest", b_manifest, "File listing graph paths, one per line")->required();
	sc_bench->add_option("--format", b_format, "Input format")->check(CLI::IsMember(formats));
	sc_bench->add_option("--k-list", b_klist, "Comma-separated k values")->required();
	sc_bench->add_option("--variants", b_variants,
	                     "Comma-separated presets: full, single-ub, plain-branch, plain");
	sc_bench->add_option("--time-limit", b_flags.time_limit_s, "Seconds per cell, 0 = unlimited");
	sc_bench->add_option("--second-order", b_flags.second_order,
	                     "Candidate order for the second coloring")
	    ->check(CLI::IsMember(orders));
	sc_bench->add_option("--seed", b_flags.seed, "Seed for randomized orders");
	sc_bench->add_option("--out", b_out, "Output JSONL path")->required();
	sc_bench->add_option("--jobs", b_jobs, "Concurrent cells (capped by KDEFECT_THREADS)");

	// oracle
	auto* sc_oracle = app.add_subcommand("oracle", "Exhaustive reference optimum (small graphs)");
	std::string o_input, o_format = "edge_list";
	int o_k = 0;
	sc_oracle->add_option("--input", o_input, "Graph file")->required();
	sc_oracle->add_option("--format", o_format, "Input format")->check(CLI::IsMember(formats));
	sc_oracle->add_option("--k", o_k, "Allowed missing pairs")->required()->check(CLI::NonNegativeNumber);

	// roots
	auto* sc_roots = app.add_subcommand("roots", "Branching-recurrence root constants");
	int r_k = 0;
	std::string r_range;
	auto* r_k_opt = sc_roots->add_option("--k", r_k, "Single k");
	auto* r_range_opt = sc_roots->add_option("--k-range", r_range, "Inclusive range A..B");
	r_k_opt->excludes(r_range_opt);

	// csv
	auto* sc_csv = app.add_subcommand("csv", "Flatten a JSONL run file to CSV");
	std::string c_in, c_out;
	sc_csv->add_option("--in", c_in, "JSONL input")->required();
	sc_csv->add_option("--out", c_out, "CSV output (default: standard output)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) return app.exit(e);
		app.exit(e);
		return 1;
	}

	if (*sc_solve) return cmd_solve(s_input, s_format, s_k, s_flags, s_emit);
	if (*sc_bench)
		return cmd_bench(b_manifest, b_format, b_klist, b_variants, b_flags, b_out, b_jobs);
	if (*sc_oracle) return cmd_oracle(o_input, o_format, o_k);
	if (*sc_roots) {
		if (r_k_opt->count() == 0 && r_range_opt->count() == 0) {
			std::cerr << "error: roots needs --k or --k-range\n";
			return 1;
		}
		return cmd_roots(r_k, r_range);
	}
	if (*sc_csv) return cmd_csv(c_in, c_out);
	return 1;
}
