#include "csst/harness/oplog.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace csst::harness {

OpRecord OpRecord::init(std::vector<Index> lengths) {
  OpRecord op;
  op.kind = OpKind::Init;
  op.lengths = std::move(lengths);
  return op;
}

OpRecord OpRecord::insert(NodeId u, NodeId v) {
  OpRecord op;
  op.kind = OpKind::Insert;
  op.u = u;
  op.v = v;
  return op;
}

OpRecord OpRecord::erase(NodeId u, NodeId v) {
  OpRecord op = insert(u, v);
  op.kind = OpKind::Delete;
  return op;
}

OpRecord OpRecord::successor(NodeId u, Chain t) {
  OpRecord op;
  op.kind = OpKind::Successor;
  op.u = u;
  op.chain = t;
  return op;
}

OpRecord OpRecord::predecessor(NodeId u, Chain t) {
  OpRecord op = successor(u, t);
  op.kind = OpKind::Predecessor;
  return op;
}

OpRecord OpRecord::reachable(NodeId u, NodeId v) {
  OpRecord op = insert(u, v);
  op.kind = OpKind::Reachable;
  return op;
}

OpRecord OpRecord::grow(Chain t, Index new_len) {
  OpRecord op;
  op.kind = OpKind::Grow;
  op.chain = t;
  op.length = new_len;
  return op;
}

namespace {

std::string pair_str(NodeId a) { return std::to_string(a.chain) + " " + std::to_string(a.index); }

}  // namespace

std::string to_string(const OpRecord& op) {
  switch (op.kind) {
    case OpKind::Init: {
      std::string s = "init " + std::to_string(op.lengths.size());
      for (const Index len : op.lengths) s += " " + std::to_string(len);
      return s;
    }
    case OpKind::Insert:
      return "ins " + pair_str(op.u) + " " + pair_str(op.v);
    case OpKind::Delete:
      return "del " + pair_str(op.u) + " " + pair_str(op.v);
    case OpKind::Successor:
      return "succ " + pair_str(op.u) + " " + std::to_string(op.chain);
    case OpKind::Predecessor:
      return "pred " + pair_str(op.u) + " " + std::to_string(op.chain);
    case OpKind::Reachable:
      return "reach " + pair_str(op.u) + " " + pair_str(op.v);
    case OpKind::Grow:
      return "grow " + std::to_string(op.chain) + " " + std::to_string(op.length);
  }
  return {};
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct LineParser {
  std::size_t line_no;
  std::vector<std::string> words;
  std::size_t next = 1;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_no, message); }

  std::uint32_t number() {
    if (next >= words.size()) fail("missing operand for '" + words[0] + "'");
    const std::string& w = words[next++];
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) fail("expected a non-negative integer, got '" + w + "'");
    return value;
  }

  void finish() const {
    if (next != words.size()) fail("too many operands for '" + words[0] + "'");
  }
};

}  // namespace

std::vector<OpRecord> parse_oplog(std::istream& in) {
  std::vector<OpRecord> ops;
  std::optional<ChainGeometry> geom;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    LineParser p{line_no, {}};
    for (std::string w; words >> w;) p.words.push_back(std::move(w));
    if (p.words.empty()) continue;

    const std::string& cmd = p.words[0];
    if (cmd == "init") {
      if (geom) p.fail("duplicate init");
      const std::uint32_t k = p.number();
      if (k == 0) p.fail("init needs at least one chain");
      std::vector<Index> lengths;
      for (std::uint32_t t = 0; t < k; ++t) lengths.push_back(p.number());
      p.finish();
      geom.emplace(lengths);
      ops.push_back(OpRecord::init(std::move(lengths)));
      continue;
    }
    if (!geom) p.fail("first record must be init");

    auto node = [&]() {
      const NodeId n{p.number(), p.number()};
      if (!geom->contains(n)) p.fail("node " + to_string(n) + " outside the declared geometry");
      return n;
    };
    auto chain = [&]() {
      const Chain t = p.number();
      if (t >= geom->k()) p.fail("chain " + std::to_string(t) + " outside the declared geometry");
      return t;
    };

    OpRecord op;
    if (cmd == "ins" || cmd == "del" || cmd == "reach") {
      const NodeId u = node();
      const NodeId v = node();
      op = cmd == "ins" ? OpRecord::insert(u, v)
                        : cmd == "del" ? OpRecord::erase(u, v) : OpRecord::reachable(u, v);
    } else if (cmd == "succ" || cmd == "pred") {
      const NodeId u = node();
      const Chain t = chain();
      op = cmd == "succ" ? OpRecord::successor(u, t) : OpRecord::predecessor(u, t);
    } else if (cmd == "grow") {
      const Chain t = chain();
      const Index len = p.number();
      if (len < geom->length(t)) p.fail("grow cannot shrink chain " + std::to_string(t));
      geom->grow(t, len);
      op = OpRecord::grow(t, len);
    } else {
      p.fail("unknown record '" + cmd + "'");
    }
    p.finish();
    ops.push_back(std::move(op));
  }
  if (!geom) throw ParseError(line_no, "empty op-log: missing init");
  return ops;
}

std::vector<OpRecord> parse_oplog_string(const std::string& text) {
  std::istringstream in(text);
  return parse_oplog(in);
}

std::string format_oplog(const std::vector<OpRecord>& ops) {
  std::string out;
  for (const auto& op : ops) {
    out += to_string(op);
    out += '\n';
  }
  return out;
}

std::optional<Answer> apply(PartialOrder& po, const OpRecord& op) {
  switch (op.kind) {
    case OpKind::Init:
      return std::nullopt;
    case OpKind::Insert:
      po.insert_edge(op.u, op.v);
      return std::nullopt;
    case OpKind::Delete:
      po.delete_edge(op.u, op.v);
      return std::nullopt;
    case OpKind::Successor:
      return Answer{po.successor(op.u, op.chain)};
    case OpKind::Predecessor:
      return Answer{po.predecessor(op.u, op.chain)};
    case OpKind::Reachable:
      return Answer{po.reachable(op.u, op.v)};
    case OpKind::Grow:
      po.grow(op.chain, op.length);
      return std::nullopt;
  }
  return std::nullopt;
}

std::string format_answer(const OpRecord& op, const Answer& answer) {
  if (const bool* b = std::get_if<bool>(&answer)) return std::string("reach -> ") + (*b ? "true" : "false");
  const auto& idx = std::get<std::optional<Index>>(answer);
  if (op.kind == OpKind::Successor) return "succ -> " + (idx ? std::to_string(*idx) : "inf");
  return "pred -> " + (idx ? std::to_string(*idx) : "none");
}

}  // namespace csst::harness
