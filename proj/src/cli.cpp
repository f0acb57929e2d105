#include "posetkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetkit/core.hpp"
#include "posetkit/decomp.hpp"
#include "posetkit/document.hpp"
#include "posetkit/gen.hpp"
#include "posetkit/oracle.hpp"

namespace posetkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::DuplicateLabel:
    case Errc::UnknownLabel:
    case Errc::BadParams:
    case Errc::InstanceTooLarge:
      return kUsage;
    case Errc::EmptyCarrier:
    case Errc::NotReflexive:
    case Errc::NotAntisymmetric:
    case Errc::NotTransitive:
      return kInvalidPoset;
    default:
      return kVerificationFailed;
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + path + "'");
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// --- validate --------------------------------------------------------------

int cmd_validate(Context& ctx, const std::string& path) {
  const auto doc = parse_poset_document(read_input(path, ctx.in));
  const auto leq = relation_from_pairs(doc.elements, doc.pairs, doc.kind);
  bool all_pass = true;
  for (const auto& check : check_order_axioms(leq)) {
    ctx.out << check.axiom << (check.pass ? " PASS" : " FAIL");
    if (check.witness) {
      const auto& w = *check.witness;
      ctx.out << " (" << doc.elements[w.a] << "," << doc.elements[w.b] << ")";
      if (w.via) ctx.out << " via " << doc.elements[*w.via];
    }
    ctx.out << "\n";
    all_pass = all_pass && check.pass;
  }
  return all_pass ? kOk : kInvalidPoset;
}

// --- decompose -------------------------------------------------------------

struct DecomposeArgs {
  std::string path;
  std::string theorem = "dilworth";
  std::string method;
  std::string witness_out;
};

int cmd_decompose(Context& ctx, DecomposeArgs args) {
  const FinitePoset poset = to_poset(parse_poset_document(read_input(args.path, ctx.in)));
  const bool dilworth = args.theorem == "dilworth";
  if (args.method.empty()) args.method = dilworth ? "perles" : "mirsky";

  CoverFamily cover{poset, {}, Flavor::chain_cover};
  std::size_t optimum = 0;
  std::optional<ElementSubset> witness;
  WitnessKind witness_kind = WitnessKind::antichain;

  if (dilworth) {
    if (args.method != "perles" && args.method != "matching") {
      throw UsageError("dilworth supports --method perles or matching");
    }
    const bool large = poset.size() > kExactWidthLimit;
    if (large && args.method == "perles") {
      ctx.err << "note: " << poset.size() << " elements exceed the exact-search limit of " << kExactWidthLimit
              << "; using the matching method instead of perles\n";
      args.method = "matching";
    }
    if (large) ctx.err << "note: width and witness derived from a maximum matching\n";
    cover = args.method == "perles" ? chain_cover_perles(poset) : min_chain_cover_matching(poset);
    optimum = width(poset);
    witness = largest_antichain(poset).subset();
  } else {
    if (args.method != "mirsky") throw UsageError("mirsky supports --method mirsky");
    cover = antichain_cover_mirsky(poset);
    optimum = height(poset);
    witness = largest_chain(poset).subset();
    witness_kind = WitnessKind::chain;
  }

  ctx.out << write_cover_document(to_document(cover, args.method));
  ctx.out << (dilworth ? "width=" : "height=") << optimum << " cover=" << cover.size() << "\n";
  if (!args.witness_out.empty()) {
    write_file(args.witness_out, write_witness_document(to_document(*witness, witness_kind)));
  }
  return optimum == cover.size() && witness->size() == optimum ? kOk : kVerificationFailed;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(Context& ctx, const std::string& poset_path, const std::string& cover_path,
               const std::string& witness_path) {
  const FinitePoset poset = to_poset(parse_poset_document(read_input(poset_path, ctx.in)));
  const CoverFamily cover = to_cover(parse_cover_document(read_input(cover_path, ctx.in)), poset);

  if (witness_path.empty()) {
    const auto report = oracle::check_cover(cover);
    ctx.out << "report: " << oracle::render(report) << "\n";
    return report.ok ? kOk : kVerificationFailed;
  }

  const auto witness_doc = parse_witness_document(read_input(witness_path, ctx.in));
  const bool chains = cover.flavor == Flavor::chain_cover;
  if ((witness_doc.kind == WitnessKind::antichain) != chains) {
    throw UsageError(chains ? "a chain cover is checked against an antichain witness"
                            : "an antichain cover is checked against a chain witness");
  }
  const ElementSubset witness = to_subset(witness_doc, poset);
  const auto report = chains ? oracle::verify_antichain_vs_cover(witness, cover)
                             : oracle::verify_chain_vs_antichain_cover(witness, cover);
  ctx.out << "report: " << oracle::render(report) << "\n";
  if (auto clash = oracle::find_pigeonhole(witness, cover)) {
    ctx.out << "pigeonhole: " << poset.label(ElementId{*clash->first}) << " and "
            << poset.label(ElementId{*clash->second}) << " share part " << *clash->part << "\n";
  }
  if (report.ok) {
    ctx.out << "bound: witness=" << witness.size() << " parts=" << cover.size()
            << (witness.size() == cover.size() ? " tight" : "") << "\n";
  }
  return report.ok ? kOk : kVerificationFailed;
}

// --- hasse / gen -----------------------------------------------------------

int cmd_hasse(Context& ctx, const std::string& path) {
  ctx.out << to_dot(to_poset(parse_poset_document(read_input(path, ctx.in))));
  return kOk;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 1;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  double p = 0.5;
  std::size_t index = 0;
};

int cmd_gen(Context& ctx, const GenArgs& args) {
  const auto kind = parse_gen_kind(args.kind);
  if (!kind) throw UsageError("unknown kind '" + args.kind + "'");
  const GenSpec spec{*kind, args.n, args.m, args.seed, args.p, args.index};
  ctx.out << write_poset_document(to_document(generate(spec)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"posetkit: chain and antichain decompositions of finite posets"};
  app.name("posetkit");
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check the order axioms of a poset document");
  validate->add_option("file", validate_path, "poset document, '-' for stdin")->required();

  DecomposeArgs decompose_args;
  auto* decompose = app.add_subcommand("decompose", "emit a minimum chain or antichain cover");
  decompose->add_option("file", decompose_args.path, "poset document, '-' for stdin")->required();
  decompose->add_option("--theorem", decompose_args.theorem, "dilworth (chains) or mirsky (antichains)")
      ->check(CLI::IsMember({"dilworth", "mirsky"}));
  decompose->add_option("--method", decompose_args.method, "perles|matching for dilworth, mirsky for mirsky")
      ->check(CLI::IsMember({"perles", "matching", "mirsky"}));
  decompose->add_option("--witness-out", decompose_args.witness_out, "write the optimality witness here");

  std::string verify_poset, verify_cover, verify_witness;
  auto* verify = app.add_subcommand("verify", "check a cover, optionally against a witness");
  verify->add_option("poset", verify_poset, "poset document")->required();
  verify->add_option("cover", verify_cover, "cover document")->required();
  verify->add_option("--witness", verify_witness, "witness document");

  std::string hasse_path;
  auto* hasse = app.add_subcommand("hasse", "print the Hasse diagram as Graphviz DOT");
  hasse->add_option("file", hasse_path, "poset document, '-' for stdin")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a poset document");
  gen->add_option("--kind", gen_args.kind,
                  "random_dag|boolean_lattice|divisor|grid|total_order|antichain|exhaustive")
      ->required();
  gen->add_option("--n", gen_args.n, "size, rank, number or first grid side");
  gen->add_option("--m", gen_args.m, "second grid side");
  gen->add_option("--seed", gen_args.seed, "random_dag seed");
  gen->add_option("--p", gen_args.p, "random_dag edge probability");
  gen->add_option("--index", gen_args.index, "exhaustive: which poset");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{in, out, err};
  try {
    if (*validate) return cmd_validate(ctx, validate_path);
    if (*decompose) return cmd_decompose(ctx, decompose_args);
    if (*verify) return cmd_verify(ctx, verify_poset, verify_cover, verify_witness);
    if (*hasse) return cmd_hasse(ctx, hasse_path);
    if (*gen) return cmd_gen(ctx, gen_args);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace posetkit::cli
