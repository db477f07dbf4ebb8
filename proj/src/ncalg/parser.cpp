#include "qc/parser.hpp"

#include <algorithm>
#include <cctype>

namespace qc {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(const std::string& s, const Alphabet& al, const std::vector<std::string>& extra)
        : s_(s), al_(al), extra_(extra) {
        for (int g = 0; g < al.size(); ++g) names_.push_back({al.name(static_cast<Gen>(g)), g});
        std::sort(names_.begin(), names_.end(),
                  [](auto& a, auto& b) { return a.first.size() > b.first.size(); });
    }

    NodePtr run() {
        NodePtr e = expr();
        skip();
        if (p_ < static_cast<int>(s_.size())) throw ParseError(std::string("unexpected '") + s_[p_] + "'", p_);
        return e;
    }

private:
    void skip() {
        while (p_ < static_cast<int>(s_.size()) && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    char peek() {
        skip();
        return p_ < static_cast<int>(s_.size()) ? s_[p_] : '\0';
    }
    static NodePtr make(Node::Kind k, int pos, NodePtr l = nullptr, NodePtr r = nullptr) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->pos = pos;
        n->l = std::move(l);
        n->r = std::move(r);
        return n;
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return e;
            int pos = p_++;
            e = make(c == '+' ? Node::Add : Node::Sub, pos, std::move(e), term());
        }
    }

    NodePtr term() {
        char c = peek();
        int pos = p_;
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++p_;
        }
        NodePtr e = product();
        if (peek() == '@') {
            int tp = p_++;
            e = make(Node::Tensor, tp, std::move(e), product());
        }
        if (neg) e = make(Node::Neg, pos, std::move(e));
        return e;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    NodePtr product() {
        NodePtr e = power();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                int pos = p_++;
                e = make(c == '*' ? Node::Mul : Node::Div, pos, std::move(e), power());
            } else if (starts_factor()) {
                int pos = p_;
                e = make(Node::Mul, pos, std::move(e), power());
            } else {
                return e;
            }
        }
    }

    NodePtr power() {
        NodePtr a = atom();
        if (peek() == '^') {
            int pos = p_++;
            skip();
            int start = p_;
            while (p_ < static_cast<int>(s_.size()) && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (start == p_) throw ParseError("expected a non-negative integer exponent", p_);
            NodePtr n = make(Node::Pow, pos, std::move(a));
            n->exp = std::stoi(s_.substr(start, p_ - start));
            return n;
        }
        return a;
    }

    NodePtr atom() {
        char c = peek();
        int pos = p_;
        if (c == '(') {
            ++p_;
            NodePtr e = expr();
            if (peek() != ')') throw ParseError("expected ')'", p_);
            ++p_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start = p_;
            while (p_ < static_cast<int>(s_.size()) && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            NodePtr n = make(Node::Num, pos);
            n->num = mpz_class(s_.substr(start, p_ - start));
            return n;
        }
        if (c == '\0') throw ParseError("unexpected end of input", p_);
        if (!ident_char(c)) throw ParseError(std::string("unexpected '") + c + "'", p_);
        for (auto& [name, g] : names_) {
            if (s_.compare(p_, name.size(), name) != 0) continue;
            size_t end = p_ + name.size();
            if (end < s_.size() && ident_char(s_[end]) && ident_char(name.back())) continue;
            p_ = static_cast<int>(end);
            NodePtr n = make(Node::Gen_, pos);
            n->gen = g;
            return n;
        }
        int start = p_;
        while (p_ < static_cast<int>(s_.size()) && ident_char(s_[p_])) ++p_;
        std::string tok = s_.substr(start, p_ - start);
        if (tok == "i") return make(Node::Imag, pos);
        if (tok == al_.param() || std::find(extra_.begin(), extra_.end(), tok) != extra_.end()) {
            NodePtr n = make(Node::Atom, pos);
            n->atom = tok;
            return n;
        }
        throw ParseError("unknown generator '" + tok + "'", start);
    }

    const std::string& s_;
    const Alphabet& al_;
    const std::vector<std::string>& extra_;
    std::vector<std::pair<std::string, int>> names_;
    int p_ = 0;
};

struct PolyRing {
    using Value = NCPoly;
    const Alphabet& al;
    Value number(const mpz_class& n) const { return NCPoly(Scalar(GaussRat(mpq_class(n)))); }
    Value imag() const { return NCPoly(Scalar::i()); }
    Value atom(const std::string& a, int pos) const {
        if (a == al.param()) return NCPoly(Scalar::var());
        throw ParseError("atom '" + a + "' not allowed here", pos);
    }
    Value gen(Gen g) const { return NCPoly::gen(g); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, int pos) const {
        if (!b.is_scalar()) throw ParseError("division by a non-scalar", pos);
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a * b.scalar_part().inv();
    }
    Value tensor(const Node&, const Node&, int pos) const { throw ParseError("'@' not allowed here", pos); }
};

struct TensorRing {
    using Value = TensorPoly;
    const Alphabet& al;
    PolyRing pr{al};
    static Value scalar(const Scalar& c) { return TensorPoly::unit() * c; }
    static bool is_scalar(const Value& v) {
        for (auto& [k, c] : v.terms())
            if (!k.first.empty() || !k.second.empty()) return false;
        return true;
    }
    static Scalar scalar_of(const Value& v) {
        auto it = v.terms().find({Word(), Word()});
        return it == v.terms().end() ? Scalar() : it->second;
    }
    Value number(const mpz_class& n) const { return scalar(Scalar(GaussRat(mpq_class(n)))); }
    Value imag() const { return scalar(Scalar::i()); }
    Value atom(const std::string& a, int pos) const { return scalar(pr.atom(a, pos).scalar_part()); }
    Value gen(Gen) const { throw std::logic_error("generator outside a tensor leg"); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const {
        if (is_scalar(a)) return b * scalar_of(a);
        if (is_scalar(b)) return a * scalar_of(b);
        return a * b;
    }
    Value div(const Value& a, const Value& b, int pos) const {
        if (!is_scalar(b) || b.is_zero()) throw ParseError("division by a non-scalar", pos);
        return a * scalar_of(b).inv();
    }
    Value tensor(const Node& l, const Node& r, int) const {
        return TensorPoly::of(eval_ast(l, pr), eval_ast(r, pr));
    }
};

// a tensor expression is a sum whose leaves are tensors or pure scalars
TensorPoly eval_tensor(const Node& n, const TensorRing& ring) {
    switch (n.kind) {
        case Node::Add: return eval_tensor(*n.l, ring) + eval_tensor(*n.r, ring);
        case Node::Sub: return eval_tensor(*n.l, ring) - eval_tensor(*n.r, ring);
        case Node::Neg: return -eval_tensor(*n.l, ring);
        case Node::Tensor: return ring.tensor(*n.l, *n.r, n.pos);
        case Node::Mul: return ring.mul(eval_tensor(*n.l, ring), eval_tensor(*n.r, ring));
        case Node::Div: return ring.div(eval_tensor(*n.l, ring), eval_tensor(*n.r, ring), n.pos);
        default: {
            NCPoly p = eval_ast(n, ring.pr);
            if (!p.is_scalar()) throw ParseError("expected 'x @ y' in a tensor expression", n.pos);
            return TensorRing::scalar(p.scalar_part());
        }
    }
}

}  // namespace

NodePtr parse_ast(const std::string& text, const Alphabet& al, const std::vector<std::string>& extra) {
    return Parser(text, al, extra).run();
}

NCPoly parse(const std::string& text, const Alphabet& al) {
    NodePtr n = parse_ast(text, al);
    return eval_ast(*n, PolyRing{al});
}

TensorPoly parse_tensor(const std::string& text, const Alphabet& al) {
    NodePtr n = parse_ast(text, al);
    return eval_tensor(*n, TensorRing{al});
}

Scalar parse_scalar(const std::string& text, const std::string& var) {
    Alphabet al({}, {}, var);
    NCPoly p = parse(text, al);
    return p.scalar_part();
}

}  // namespace qc
