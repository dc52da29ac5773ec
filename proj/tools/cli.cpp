#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>

#include "ghcode/codeword.hpp"
#include "ghcode/container.hpp"
#include "ghcode/errors.hpp"
#include "ghcode/representations.hpp"
#include "ghcode/stream.hpp"

namespace ghcode::cli {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

SequenceDef parse_sequence(std::string_view selector) {
  selector = trim(selector);
  if (selector == "std") return SequenceDef::standard();
  if (selector.starts_with("a=")) {
    const auto comma = selector.find(',');
    if (comma == std::string_view::npos) return SequenceDef::variant(parse_int(selector.substr(2)));
    const auto rest = trim(selector.substr(comma + 1));
    if (!rest.starts_with("b=")) throw std::invalid_argument("expected b=<int> after a=<int>,");
    return {parse_int(selector.substr(2, comma - 2)), parse_int(rest.substr(2))};
  }
  return SequenceDef::variant(parse_int(selector));
}

std::vector<SequenceDef> parse_sequence_set(std::string_view list) {
  std::vector<SequenceDef> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item == "std") {
      out.push_back(SequenceDef::standard());
    } else if (const auto colon = item.find(':'); colon != std::string_view::npos) {
      out.push_back({parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
    } else {
      out.push_back(SequenceDef::variant(parse_int(item)));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty sequence set");
  return out;
}

namespace {

struct Options {
  std::string seq = "std";
  std::int64_t max = 15;
  std::int64_t cap = 1'000'000;
  std::int64_t value = 0;
  std::string bits;
  std::string input = "-";
  std::string output = "-";
  std::uint64_t rotate_seed = 0;
  std::string rotate_set;
  std::uint32_t block = 64;
  bool golden = false;
  bool csv = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t checked_max(const Options& opt) {
  if (opt.max < 1) throw UsageError("--max must be at least 1");
  if (opt.max > opt.cap) {
    throw UsageError("--max " + std::to_string(opt.max) + " exceeds the cap of " +
                     std::to_string(opt.cap) + " (raise it with --cap)");
  }
  return opt.max;
}

SequenceDef sequence_of(const Options& opt) {
  try {
    return parse_sequence(opt.seq);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --seq: ") + e.what());
  }
}

void cmd_table(const Options& opt, std::ostream& out) {
  const SequenceDef def = sequence_of(opt);
  const std::int64_t max_n = checked_max(opt);
  if (!opt.golden) out << "# n: codewords over " << to_string(def) << "\n";
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto reps = enumerate_representations(n, def);
    out << n << ": ";
    if (reps.empty()) out << "N/A";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (i) out << " or ";
      out << rep_to_codeword(reps[i]).to_string();
    }
    out << "\n";
  }
}

void cmd_encode(const Options& opt, std::ostream& out) {
  if (opt.value < 1) throw UsageError("the value to encode must be at least 1");
  out << encode_integer(opt.value, sequence_of(opt)).to_string() << "\n";
}

void cmd_decode(const Options& opt, std::ostream& out) {
  if (opt.bits.empty()) throw UsageError("no bits given");
  Codeword bits;
  try {
    bits = Codeword::parse(opt.bits);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const DecodeResult r = decode_codeword(bits.bits, sequence_of(opt));
  if (r.value < 1) {
    throw Error(ErrorCode::DecodedNonPositive, "codeword decodes to " + std::to_string(r.value));
  }
  out << r.value << " (" << r.consumed << " bits)\n";
}

void cmd_scan(const Options& opt, std::ostream& out) {
  const auto missing = feasibility_scan(sequence_of(opt), checked_max(opt));
  if (opt.csv) {
    out << "n\n";
    for (auto n : missing) out << n << "\n";
    return;
  }
  if (missing.empty()) {
    out << "none\n";
    return;
  }
  for (std::size_t i = 0; i < missing.size(); ++i) out << (i ? ", " : "") << missing[i];
  out << "\n";
}

void cmd_profile(const Options& opt, std::ostream& out) {
  const auto histogram = uniqueness_profile(sequence_of(opt), checked_max(opt));
  if (opt.csv) out << "count,integers\n";
  for (const auto& [count, how_many] : histogram) {
    if (opt.csv) {
      out << count << "," << how_many << "\n";
    } else {
      out << "count=" << count << ": " << how_many << "\n";
    }
  }
}

void cmd_lengths(const Options& opt, std::ostream& out) {
  const auto entries = codeword_lengths(sequence_of(opt), checked_max(opt));
  if (opt.csv) out << "n,length\n";
  for (const auto& e : entries) {
    out << e.n << (opt.csv ? "," : ": ");
    if (e.length) {
      out << *e.length;
    } else {
      out << (opt.csv ? "NA" : "N/A");
    }
    out << "\n";
  }
}

std::vector<std::uint8_t> read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, std::span<const std::uint8_t> bytes, std::ostream& out) {
  auto put = [&](std::ostream& os) {
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + path);
  };
  if (path == "-") return put(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  put(file);
}

CodecConfig codec_of(const Options& opt) {
  CodecConfig config;
  if (opt.rotate_set.empty()) {
    config.sequence = sequence_of(opt);
    return config;
  }
  RotationSchedule schedule;
  try {
    schedule.param_set = parse_sequence_set(opt.rotate_set);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --rotate-set: ") + e.what());
  }
  if (opt.block == 0) throw UsageError("--block must be positive");
  schedule.seed = opt.rotate_seed;
  schedule.block_size = opt.block;
  config.sequence = std::move(schedule);
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fibonacci and Gopala-Hemachandra universal codes", "ghcode"};
  app.require_subcommand(1);
  Options opt;

  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq,-a", opt.seq, "std | a=<int> | a=<int>,b=<int> | <int>");
  };
  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--max", opt.max, "largest n to cover");
    sub->add_option("--cap", opt.cap, "upper limit accepted for --max");
  };

  auto* table = app.add_subcommand("table", "codewords for n = 1..max, all alternatives");
  add_seq(table);
  add_range(table);
  table->add_flag("--golden", opt.golden, "rows only, in the published table layout");

  auto* encode = app.add_subcommand("encode", "canonical codeword of one integer");
  add_seq(encode);
  encode->add_option("n", opt.value, "integer to encode")->required();

  auto* decode = app.add_subcommand("decode", "decode the first codeword of a bit string");
  add_seq(decode);
  decode->add_option("codeword", opt.bits, "'0'/'1' string");
  decode->add_option("--bits", opt.bits, "'0'/'1' string");

  auto* scan = app.add_subcommand("scan", "integers without any representation");
  auto* profile = app.add_subcommand("profile", "histogram of representation counts");
  auto* lengths = app.add_subcommand("lengths", "canonical codeword length per n");
  for (auto* sub : {scan, profile, lengths}) {
    add_seq(sub);
    add_range(sub);
    sub->add_flag("--csv", opt.csv, "CSV output");
  }

  auto* compress_cmd = app.add_subcommand("compress", "rank-map and encode a file");
  auto* decompress_cmd = app.add_subcommand("decompress", "restore a compressed file");
  for (auto* sub : {compress_cmd, decompress_cmd}) {
    sub->add_option("-i,--input", opt.input, "input path, - for stdin");
    sub->add_option("-o,--output", opt.output, "output path, - for stdout");
  }
  add_seq(compress_cmd);
  compress_cmd->add_option("--rotate-seed", opt.rotate_seed, "rotation key");
  compress_cmd->add_option("--rotate-set", opt.rotate_set, "comma list of std | <a> | <a>:<b>");
  compress_cmd->add_option("--block", opt.block, "symbols per rotation block");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ghcode: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (table->parsed()) cmd_table(opt, out);
    if (encode->parsed()) cmd_encode(opt, out);
    if (decode->parsed()) cmd_decode(opt, out);
    if (scan->parsed()) cmd_scan(opt, out);
    if (profile->parsed()) cmd_profile(opt, out);
    if (lengths->parsed()) cmd_lengths(opt, out);
    if (compress_cmd->parsed()) {
      const auto data = read_input(opt.input, in);
      write_output(opt.output, compress(data, codec_of(opt)), out);
    }
    if (decompress_cmd->parsed()) {
      const auto data = read_input(opt.input, in);
      write_output(opt.output, decompress(data), out);
    }
  } catch (const UsageError& e) {
    err << "ghcode: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "ghcode: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "ghcode: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}

}  // namespace ghcode::cli
