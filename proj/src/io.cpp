#include "cesaro/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cesaro {
namespace {

using nlohmann::json;

json rational_entry(const Rational& r) {
  if (r.get_den() == 1 && mpz_fits_slong_p(r.get_num().get_mpz_t()))
    return json(static_cast<long>(r.get_num().get_si()));
  return json(rational_to_string(r));
}

Rational entry_to_rational(const json& e) {
  if (e.is_number_integer()) return Rational(static_cast<long>(e.get<int64_t>()));
  if (e.is_string()) return parse_rational(e.get<std::string>());
  throw Error(ErrorKind::Structural,
              "rational entry must be an integer or a \"p/q\" string");
}

json complex_entry(const Complex& z) {
  if (z.imag() == 0.0) return json(z.real());
  return json::array({z.real(), z.imag()});
}

Complex entry_to_complex(const json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_string()) return to_complex(parse_rational(e.get<std::string>()));
  if (e.is_array() && e.size() == 2)
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw Error(ErrorKind::Structural,
              "complex entry must be a number or an [re, im] pair");
}

template <class T, class ToJson>
json mat_to_json(const Mat<T>& m, ToJson to) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vec_to_json_row(const RMat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(rational_entry(m(i, j)));
  return out;
}

json vec_to_json_row(const CMat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(complex_entry(m(i, j)));
  return out;
}

template <class T, class FromJson>
Mat<T> json_to_matrix(const json& rows, int expect_rows, int expect_cols,
                      FromJson from, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != expect_rows)
    throw Error(ErrorKind::Structural,
                std::string(what) + ": expected " +
                    std::to_string(expect_rows) + " rows");
  Mat<T> m(expect_rows, expect_cols);
  for (int i = 0; i < expect_rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
      throw Error(ErrorKind::Structural,
                  std::string(what) + ": row " + std::to_string(i) +
                      " must have " + std::to_string(expect_cols) +
                      " entries");
    for (int j = 0; j < expect_cols; ++j) m(i, j) = from(row[j]);
  }
  return m;
}

template <class T, class FromJson>
Mat<T> json_to_flat(const json& flat, int rows, int cols, FromJson from,
                    const char* what) {
  if (!flat.is_array() || static_cast<int>(flat.size()) != rows * cols)
    throw Error(ErrorKind::Structural,
                std::string(what) + ": expected " + std::to_string(rows * cols) +
                    " entries");
  Mat<T> m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = from(flat[k++]);
  return m;
}

template <class T, class FromJson>
LinearRep<T> parse_typed(const json& doc, FromJson from) {
  LinearRep<T> rep;
  rep.radix = doc.at("radix").get<int>();
  rep.dim = doc.at("dim").get<int>();
  if (rep.radix < 2 || rep.dim < 1)
    throw Error(ErrorKind::Structural, "radix/dim out of range");
  rep.L = json_to_flat<T>(doc.at("L"), 1, rep.dim, from, "L");
  rep.C = json_to_flat<T>(doc.at("C"), rep.dim, 1, from, "C");
  const json& mats = doc.at("A");
  if (!mats.is_array() || static_cast<int>(mats.size()) != rep.radix)
    throw Error(ErrorKind::Structural, "A: expected one matrix per digit");
  for (int r = 0; r < rep.radix; ++r)
    rep.A.push_back(json_to_matrix<T>(mats[r], rep.dim, rep.dim, from,
                                      "A matrix"));
  if (doc.contains("eigen_hints"))
    for (const json& h : doc.at("eigen_hints"))
      rep.eigen_hints.push_back(entry_to_complex(h));
  if (doc.contains("name")) rep.name = doc.at("name").get<std::string>();
  validate(rep);
  return rep;
}

const char* norm_name(NormKind k) {
  switch (k) {
    case NormKind::One: return "one";
    case NormKind::Inf: return "inf";
    case NormKind::Two: return "two";
  }
  return "?";
}

const char* attained_name(Attained a) {
  switch (a) {
    case Attained::Yes: return "yes";
    case Attained::No: return "no";
    case Attained::Unknown: return "unknown";
  }
  return "?";
}

json complex_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

}  // namespace

AnyRep parse_rep(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Structural, std::string("JSON parse: ") + e.what());
  }
  try {
    std::string scalar = doc.value("scalar", "rational");
    if (scalar == "rational")
      return parse_typed<Rational>(doc, entry_to_rational);
    if (scalar == "complex")
      return parse_typed<Complex>(doc, entry_to_complex);
    throw Error(ErrorKind::Structural,
                "scalar must be \"rational\" or \"complex\"");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Structural, std::string("rep file: ") + e.what());
  }
}

AnyRep load_rep(const std::string& path) { return parse_rep(read_file(path)); }

std::string rep_to_json(const AnyRep& rep) {
  json doc;
  std::visit(
      [&doc](const auto& r) {
        using T = typename std::decay_t<decltype(r)>;
        doc["radix"] = r.radix;
        doc["dim"] = r.dim;
        doc["scalar"] =
            std::is_same_v<T, RRep> ? "rational" : "complex";
        doc["L"] = vec_to_json_row(r.L);
        doc["C"] = vec_to_json_row(r.C);
        json mats = json::array();
        for (const auto& a : r.A) {
          if constexpr (std::is_same_v<T, RRep>)
            mats.push_back(mat_to_json(a, rational_entry));
          else
            mats.push_back(mat_to_json(a, complex_entry));
        }
        doc["A"] = mats;
        if (!r.eigen_hints.empty()) {
          json hints = json::array();
          for (const Complex& h : r.eigen_hints) hints.push_back(complex_entry(h));
          doc["eigen_hints"] = hints;
        }
        if (!r.name.empty()) doc["name"] = r.name;
      },
      rep);
  return doc.dump(2) + "\n";
}

void save_rep(const AnyRep& rep, const std::string& path) {
  write_file(path, rep_to_json(rep));
}

std::string jsr_to_json(const JsrEstimate& est) {
  json doc;
  doc["lower"] = format_double(est.lower);
  doc["upper"] = format_double(est.upper);
  doc["witness_norm"] = norm_name(est.witness_norm);
  doc["T"] = est.T;
  doc["attained"] = attained_name(est.attained);
  doc["certificate"] = est.certificate;
  doc["exact"] = est.exact;
  if (est.exact) doc["exact_value"] = rational_to_string(est.exact_value);
  if (est.lie) {
    doc["lie"] = {{"closure_dim", est.lie->closure_dim},
                  {"derived_dims", est.lie->derived_dims},
                  {"solvable", est.lie->solvable}};
  }
  return doc.dump(2) + "\n";
}

std::string eigen_to_json(const EigenStructure& es,
                          const std::vector<JordanChain>& chains,
                          const CDecomposition& dec) {
  json doc;
  json vals = json::array();
  for (size_t i = 0; i < es.values.size(); ++i) {
    json v;
    v["value"] = complex_json(es.values[i]);
    v["multiplicity"] = es.multiplicity[i];
    v["exact"] = static_cast<bool>(es.exact[i]);
    if (es.exact[i]) v["rational"] = rational_to_string(es.rational_value[i]);
    vals.push_back(v);
  }
  doc["eigenvalues"] = vals;
  json chs = json::array();
  for (const JordanChain& ch : chains) {
    json c;
    c["eigenvalue"] = complex_json(ch.eigenvalue);
    c["height"] = ch.height();
    c["exact"] = ch.exact;
    json vecs = json::array();
    for (const CMat& v : ch.vectors) vecs.push_back(vec_to_json_row(v));
    c["vectors"] = vecs;
    chs.push_back(c);
  }
  doc["chains"] = chs;
  json gam = json::array();
  for (const auto& per_chain : dec.gamma) {
    json g = json::array();
    for (const Complex& z : per_chain) g.push_back(complex_json(z));
    gam.push_back(g);
  }
  doc["gamma"] = gam;
  doc["decomposition_exact"] = dec.exact;
  return doc.dump(2) + "\n";
}

std::string word_expansion_to_json(const WordExpansion& exp) {
  json doc;
  doc["radix"] = exp.radix;
  doc["dim"] = exp.dim;
  doc["lambda"] = format_double(exp.lambda);
  doc["lambda_exact"] = exp.lambda_exact;
  if (exp.lambda_exact)
    doc["lambda_rational"] = rational_to_string(exp.lambda_rational);
  json terms = json::array();
  for (const ExpansionTerm& t : exp.terms) {
    json e;
    e["chain"] = t.chain;
    e["gamma"] = complex_json(t.gamma);
    e["eigenvalue"] = complex_json(t.eigenvalue);
    e["height"] = t.height;
    terms.push_back(e);
  }
  doc["terms"] = terms;
  json err;
  err["kind"] = exp.err.kind == ErrorClass::Kind::ExactZero ? "exact_zero"
                : exp.err.kind == ErrorClass::Kind::Power   ? "power"
                                                            : "power_log";
  err["rate"] = format_double(exp.err.rate);
  err["log_power"] = exp.err.log_power;
  doc["error"] = err;
  return doc.dump(2) + "\n";
}

std::string expansion_to_json(const IntegerExpansion& exp) {
  json doc = json::parse(word_expansion_to_json(exp.base));
  doc["keep_constant"] = exp.keep_constant;
  json err;
  err["kind"] = exp.err.kind == ErrorClass::Kind::ExactZero ? "exact_zero"
                : exp.err.kind == ErrorClass::Kind::Power   ? "power"
                                                            : "power_log";
  err["rate"] = format_double(exp.err.rate);
  err["log_power"] = exp.err.log_power;
  doc["integer_error"] = err;
  return doc.dump(2) + "\n";
}

std::string grid_to_csv(const SolutionGrid& grid) {
  std::ostringstream out;
  out << "x";
  if (!grid.values.empty()) {
    int d = grid.values[0].rows(), nu = grid.values[0].cols();
    for (int j = 0; j < nu; ++j)
      for (int i = 0; i < d; ++i)
        out << ",re_" << i << "_" << j << ",im_" << i << "_" << j;
  }
  out << "\n";
  for (int64_t k = 0; k < grid.nodes(); ++k) {
    out << format_double(grid.node_x(k));
    const CMat& v = grid.values[k];
    for (int j = 0; j < v.cols(); ++j)
      for (int i = 0; i < v.rows(); ++i)
        out << "," << format_double(v(i, j).real()) << ","
            << format_double(v(i, j).imag());
    out << "\n";
  }
  return out.str();
}

std::string profile_to_csv(const std::vector<double>& t,
                           const std::vector<CMat>& values) {
  std::ostringstream out;
  out << "t";
  if (!values.empty())
    for (int i = 0; i < values[0].rows(); ++i)
      out << ",re_" << i << ",im_" << i;
  out << "\n";
  for (size_t k = 0; k < t.size(); ++k) {
    out << format_double(t[k]);
    for (int i = 0; i < values[k].rows(); ++i)
      out << "," << format_double(values[k](i, 0).real()) << ","
          << format_double(values[k](i, 0).imag());
    out << "\n";
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Structural, "cannot open " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Structural, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cesaro
