#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"

using namespace pencil;
using pencil::cli::Json;

namespace {

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

Field pick_field(const std::string& flag, const Json& doc) {
  if (!flag.empty()) return parse_field(flag);
  if (auto f = cli::document_field(doc)) return *f;
  return Field::R;
}

std::vector<Rat> parse_rats(const std::vector<std::string>& v) {
  std::vector<Rat> out;
  for (const auto& s : v) out.push_back(parse_rat(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor rank of m x n x 2 pencils"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string file;
  std::string file2;
  std::string field;
  std::string budget = "minimal";
  int q = 0;
  int atmost = -1;
  int threads = 0;
  int m = 0;
  int n = 0;

  auto* structure = app.add_subcommand("structure", "Kronecker structure");
  structure->add_option("file", file, "tensor document, - for stdin")->required();

  auto* rank = app.add_subcommand("rank", "tensor rank report");
  rank->add_option("file", file)->required();
  rank->add_option("--field", field)->check(CLI::IsMember({"Q", "R", "C"}));

  auto* maxrank = app.add_subcommand("maxrank", "maximal rank of m x n x 2 tensors");
  maxrank->add_option("m", m)->required();
  maxrank->add_option("n", n)->required();

  auto* borderrank = app.add_subcommand("borderrank", "border rank of a square regular pencil");
  borderrank->add_option("file", file)->required();
  borderrank->add_option("--field", field)->check(CLI::IsMember({"R", "C"}));

  auto* correct = app.add_subcommand("correct", "rank-1 corrections making the pencil diagonalizable");
  correct->add_option("file", file)->required();
  correct->add_option("--field", field)->check(CLI::IsMember({"Q", "R", "C"}));
  correct->add_option("--budget", budget)->check(CLI::IsMember({"minimal", "floor-n-half"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "rank decomposition with verification");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--field", field)->check(CLI::IsMember({"R", "C"}));

  auto* oracle = app.add_subcommand("oracle", "exhaustive rank over GF(q)");
  oracle->add_option("file", file)->required();
  oracle->add_option("--q", q, "prime <= 7 (default: the document's q)");
  oracle->add_option("--atmost", atmost, "decide rank <= r only");
  oracle->add_option("--threads", threads, "workers (default: PENCIL_RANK_THREADS or all cores)");

  auto* equiv = app.add_subcommand("equiv", "two-sided equivalence test");
  equiv->add_option("first", file)->required();
  equiv->add_option("second", file2)->required();

  auto* witness = app.add_subcommand("witness", "emit a tensor document");
  witness->require_subcommand(1);
  witness->fallthrough();
  auto* w_max = witness->add_subcommand("maxrank", "((E_m, O); (O E_{n/2}; O O))");
  w_max->add_option("m", m)->required();
  w_max->add_option("n", n)->required();
  std::string form_name;
  FormParams fp;
  std::string y_kind = "infinite";
  std::string y_eigen = "0", c_val = "0", s_val = "1", x_val = "0";
  auto* w_form = witness->add_subcommand("form", "maximal-rank normal form");
  w_form->add_option("name", form_name)->required()->check(CLI::IsMember({"even", "i", "ii", "iii", "iv", "v", "vi", "vii"}));
  w_form->add_option("--alpha", fp.alpha, "number of Y blocks");
  w_form->add_option("--ell-e", fp.ell_E, "number of E blocks");
  w_form->add_option("--y", y_kind)->check(CLI::IsMember({"jordan", "infinite", "rotation"}));
  w_form->add_option("--y-eigen", y_eigen);
  w_form->add_option("--c", c_val);
  w_form->add_option("--s", s_val);
  w_form->add_option("--x", x_val);
  int l = 0;
  auto* w_cor = witness->add_subcommand("cor-x2mn", "rank-l correction pattern");
  w_cor->add_option("m", m)->required();
  w_cor->add_option("n", n)->required();
  w_cor->add_option("l", l)->required();
  std::vector<int> sizes;
  int tail = 0;
  auto* w_jordan = witness->add_subcommand("jordan-rank", "Diag((E; xE + J)_j, (E; 0))");
  w_jordan->add_option("sizes", sizes)->required();
  w_jordan->add_option("--x", x_val);
  w_jordan->add_option("--tail", tail, "size of the zero tail block");
  std::string kind;
  int k = 1;
  int cols = 0;
  std::vector<std::string> poly;
  auto* w_block = witness->add_subcommand("block", "one canonical block");
  w_block->add_option("kind", kind)->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "Companion"}));
  w_block->add_option("--k", k, "size (rows for A)");
  w_block->add_option("--cols", cols, "columns for A");
  w_block->add_option("--alpha", y_eigen, "eigenvalue for B");
  w_block->add_option("--c", c_val);
  w_block->add_option("--s", s_val);
  w_block->add_option("--poly", poly, "monic coefficients, low order first, for Companion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    Json out;
    if (*structure) {
      out = cli::structure_report(cli::parse_tensor(read_document(file)));
    } else if (*rank) {
      const Json doc = read_document(file);
      out = cli::rank_report(cli::parse_tensor(doc), pick_field(field, doc));
    } else if (*maxrank) {
      out = cli::maxrank_report(m, n);
    } else if (*borderrank) {
      const Json doc = read_document(file);
      out = cli::borderrank_report(cli::parse_tensor(doc), pick_field(field, doc));
    } else if (*correct) {
      const Json doc = read_document(file);
      out = cli::correction_report(cli::parse_tensor(doc), pick_field(field, doc),
                                   budget == "minimal" ? BudgetMode::minimal : BudgetMode::floor_n_half);
    } else if (*decompose_cmd) {
      const Json doc = read_document(file);
      out = cli::decomposition_report(cli::parse_tensor(doc), pick_field(field, doc));
    } else if (*oracle) {
      const Json doc = read_document(file);
      int qq = q;
      if (qq == 0) qq = cli::document_q(doc).value_or(0);
      if (qq == 0) throw DomainError("oracle needs --q or a document q");
      if (!is_prime_small(qq)) throw ScopeError("GF(q) oracle supports q in {2, 3, 5, 7}");
      out = cli::oracle_report(cli::parse_gf_tensor(doc, qq), atmost >= 0 ? std::optional<int>(atmost) : std::nullopt,
                               threads);
    } else if (*equiv) {
      out = cli::equivalence_report(cli::parse_tensor(read_document(file)), cli::parse_tensor(read_document(file2)));
    } else if (*w_max) {
      if (!(1 <= m && m <= n && n <= 2 * m)) throw DomainError("maxrank witness needs m <= n <= 2m");
      out = cli::tensor_document(maxrank_example(m, n));
    } else if (*w_form) {
      fp.form = *parse_form(form_name);
      fp.y = y_kind == "jordan" ? YKind::jordan : y_kind == "rotation" ? YKind::rotation : YKind::infinite;
      fp.y_eigen = parse_rat(y_eigen);
      fp.c = parse_rat(c_val);
      fp.s = parse_rat(s_val);
      fp.x = parse_rat(x_val);
      out = cli::tensor_document(classification_form(fp));
    } else if (*w_cor) {
      out = cli::tensor_document(cor_x2mn(m, n, l));
    } else if (*w_jordan) {
      out = cli::tensor_document(jordan_rank_witness(sizes, parse_rat(x_val), RatMatrix(tail, tail)));
    } else if (*w_block) {
      BlockDescriptor b;
      if (kind == "A") b = BlockDescriptor::zero(k, cols);
      if (kind == "B") b = BlockDescriptor::jordan(k, parse_rat(y_eigen));
      if (kind == "C") b = BlockDescriptor::rotation(k, parse_rat(c_val), parse_rat(s_val));
      if (kind == "D") b = BlockDescriptor::infinite(k);
      if (kind == "E") b = BlockDescriptor::column(k);
      if (kind == "F") b = BlockDescriptor::row(k);
      if (kind == "Companion") b = BlockDescriptor::companion(Poly(parse_rats(poly)));
      if (b.rows() + b.cols() == 0) throw DomainError("empty block");
      out = cli::tensor_document(block_pencil(b));
    }
    if (format == "text") {
      std::cout << cli::render_text(out);
    } else {
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  } catch (const ScopeError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
