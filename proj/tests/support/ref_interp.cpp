#include "ref_interp.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace refi {

using namespace gool;

namespace {

struct ThrowSignal {
    std::string message;
};
struct ReturnSignal {
    Value value;
};
struct BreakSignal {};
struct ContinueSignal {};

std::string show_float(double d) {
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 1e16) {
        std::ostringstream out;
        out << static_cast<long long>(d) << ".0";
        return out.str();
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, res.ptr);
}

using Frame = std::map<std::string, Value>;

class Interp {
public:
    Interp(const Package& pkg, std::vector<std::string> args, const std::string& stdin_text)
        : pkg_(pkg), args_(std::move(args)), in_(stdin_text) {
        for (const auto& m : pkg_.modules) {
            for (const auto& c : m.classes) {
                classes_[c.name] = &c;
                for (const auto& sv : c.state_vars) {
                    if (sv.binding == Binding::Static) statics_[c.name][sv.var.name] = sv.initial ? eval_const(*sv.initial) : Value{};
                }
            }
        }
    }

    RunResult result;

    void run_main() {
        const Module* main = pkg_.main_module();
        if (!main) throw std::runtime_error("no main module");
        for (const auto& f : main->functions) {
            if (f.is_main) {
                try {
                    invoke(f, nullptr, {});
                } catch (const ThrowSignal&) {
                    result.threw = true;
                }
                return;
            }
        }
        throw std::runtime_error("no main function");
    }

    std::vector<Value> in_out(const std::string& module, const std::string& name, const std::vector<Value>& inouts,
                              const std::vector<Value>& ins) {
        const Method& f = find_function(module, name);
        return invoke_in_out(f, inouts, ins);
    }

private:
    const Package& pkg_;
    std::vector<std::string> args_;
    std::istringstream in_;
    std::map<std::string, const ClassDecl*> classes_;
    std::map<std::string, Frame> statics_;
    std::vector<Frame> frames_;
    std::vector<std::shared_ptr<Object>> selves_;
    std::shared_ptr<List> observers_;

    Frame& frame() { return frames_.back(); }

    Value eval_const(const Expr& e) {
        frames_.emplace_back();
        Value v = eval(e);
        frames_.pop_back();
        return v;
    }

    // Lookup ------------------------------------------------------------------------------

    const Method& find_function(const std::string& module, const std::string& name) {
        for (const auto& m : pkg_.modules) {
            if (!module.empty() && m.name != module) continue;
            for (const auto& f : m.functions) {
                if (f.name == name) return f;
            }
        }
        throw std::runtime_error("unknown function " + name);
    }

    const Method* find_method(const std::string& cls, const std::string& name) {
        for (const ClassDecl* c = lookup_class(cls); c; c = c->parent ? lookup_class(*c->parent) : nullptr) {
            for (const auto& m : c->methods) {
                if (m.name == name && !m.is_constructor) return &m;
            }
        }
        return nullptr;
    }

    const ClassDecl* lookup_class(const std::string& name) {
        auto it = classes_.find(name);
        return it == classes_.end() ? nullptr : it->second;
    }

    Value& slot(const Variable& v) {
        switch (v.form) {
        case VarForm::Plain: return frame()[v.name];
        case VarForm::Self:
            if (selves_.empty() || !selves_.back()) throw std::runtime_error("self outside a method");
            return selves_.back()->fields[v.name];
        case VarForm::ClassMember: return statics_[v.qualifier][v.name];
        case VarForm::ObjectMember: {
            Value owner = slot(v.owner->get());
            auto obj = std::get_if<std::shared_ptr<Object>>(&owner);
            if (!obj || !*obj) throw std::runtime_error("member of a non-object");
            return (*obj)->fields[v.name];
        }
        case VarForm::External: break;
        }
        throw std::runtime_error("external variables are not interpreted");
    }

    // Calls ------------------------------------------------------------------------------

    Value invoke(const Method& m, std::shared_ptr<Object> self, const std::vector<Value>& args) {
        if (m.containing_class) ++result.method_calls[*m.containing_class + "." + m.name];
        frames_.emplace_back();
        for (std::size_t i = 0; i < m.params.size() && i < args.size(); ++i) frame()[m.params[i].var.name] = args[i];
        selves_.push_back(std::move(self));
        Value out;
        try {
            exec_body(m.body);
        } catch (ReturnSignal& r) {
            out = std::move(r.value);
        } catch (...) {
            selves_.pop_back();
            frames_.pop_back();
            throw;
        }
        selves_.pop_back();
        frames_.pop_back();
        return out;
    }

    std::vector<Value> invoke_in_out(const Method& f, const std::vector<Value>& inouts, const std::vector<Value>& ins) {
        const InOutSpec& spec = *f.in_out;
        frames_.emplace_back();
        for (std::size_t i = 0; i < spec.inouts.size(); ++i) frame()[spec.inouts[i].name] = inouts.at(i);
        for (std::size_t i = 0; i < spec.ins.size(); ++i) frame()[spec.ins[i].name] = ins.at(i);
        selves_.push_back(nullptr);
        try {
            exec_body(f.body);
        } catch (ReturnSignal&) {
        } catch (...) {
            selves_.pop_back();
            frames_.pop_back();
            throw;
        }
        std::vector<Value> out;
        for (const auto& v : spec.inouts) out.push_back(frame()[v.name]);
        for (const auto& v : spec.outs) out.push_back(frame()[v.name]);
        selves_.pop_back();
        frames_.pop_back();
        return out;
    }

    std::shared_ptr<Object> construct(const std::string& cls, const std::vector<Value>& args) {
        auto obj = std::make_shared<Object>();
        obj->class_name = cls;
        std::vector<const ClassDecl*> chain;
        for (const ClassDecl* c = lookup_class(cls); c; c = c->parent ? lookup_class(*c->parent) : nullptr) chain.push_back(c);
        if (chain.empty()) throw std::runtime_error("unknown class " + cls);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (const auto& sv : (*it)->state_vars) {
                if (sv.binding == Binding::Dynamic) obj->fields[sv.var.name] = sv.initial ? eval_const(*sv.initial) : Value{};
            }
        }
        // Ancestors' constructors run first, without arguments, as every
        // target chains to the parent's default constructor.
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (const auto& m : (*it)->methods) {
                if (m.is_constructor) invoke(m, obj, *it == chain.front() ? args : std::vector<Value>{});
            }
        }
        return obj;
    }

    // Expressions ----------------------------------------------------------------------

    static double num(const Value& v) {
        if (auto i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
        if (auto d = std::get_if<double>(&v)) return *d;
        throw std::runtime_error("not a number");
    }
    static std::int64_t integer(const Value& v) {
        if (auto i = std::get_if<std::int64_t>(&v)) return *i;
        throw std::runtime_error("not an integer");
    }
    static bool truth(const Value& v) {
        if (auto b = std::get_if<bool>(&v)) return *b;
        throw std::runtime_error("not a boolean");
    }
    static std::shared_ptr<List> list(const Value& v) {
        if (auto l = std::get_if<std::shared_ptr<List>>(&v)) return *l;
        throw std::runtime_error("not a list");
    }

    static bool equal(const Value& a, const Value& b) {
        bool an = std::holds_alternative<std::int64_t>(a) || std::holds_alternative<double>(a);
        bool bn = std::holds_alternative<std::int64_t>(b) || std::holds_alternative<double>(b);
        if (an && bn) return num(a) == num(b);
        return a == b;
    }

    static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
        if (b == 0) throw std::runtime_error("division by zero");
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    }

    Value binary(BinaryOp op, const Value& a, const Value& b) {
        bool ints = std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b);
        switch (op) {
        case BinaryOp::And: return truth(a) && truth(b);
        case BinaryOp::Or: return truth(a) || truth(b);
        case BinaryOp::Eq: return equal(a, b);
        case BinaryOp::Ne: return !equal(a, b);
        case BinaryOp::Lt: return num(a) < num(b);
        case BinaryOp::Le: return num(a) <= num(b);
        case BinaryOp::Gt: return num(a) > num(b);
        case BinaryOp::Ge: return num(a) >= num(b);
        case BinaryOp::Add:
            if (auto s = std::get_if<std::string>(&a)) return *s + std::get<std::string>(b);
            return ints ? Value{integer(a) + integer(b)} : Value{num(a) + num(b)};
        case BinaryOp::Sub: return ints ? Value{integer(a) - integer(b)} : Value{num(a) - num(b)};
        case BinaryOp::Mul: return ints ? Value{integer(a) * integer(b)} : Value{num(a) * num(b)};
        case BinaryOp::Div: return ints ? Value{floor_div(integer(a), integer(b))} : Value{num(a) / num(b)};
        case BinaryOp::Pow: {
            if (ints && integer(b) >= 0) {
                std::int64_t r = 1;
                for (std::int64_t i = 0; i < integer(b); ++i) r *= integer(a);
                return r;
            }
            return std::pow(num(a), num(b));
        }
        }
        throw std::runtime_error("bad operator");
    }

    Value eval(const Expr& e) {
        return std::visit([&](const auto& n) -> Value { return eval_node(e, n); }, e.node);
    }

    Value eval_node(const Expr&, const Literal& n) {
        return std::visit([](const auto& v) -> Value { return v; }, n.value);
    }
    Value eval_node(const Expr&, const ValueOf& n) { return slot(n.var); }
    Value eval_node(const Expr&, const Unary& n) {
        Value v = eval(n.operand.get());
        switch (n.op) {
        case UnaryOp::Not: return !truth(v);
        case UnaryOp::Negate:
            if (auto i = std::get_if<std::int64_t>(&v)) return -*i;
            return -num(v);
        case UnaryOp::Sqrt: return std::sqrt(num(v));
        case UnaryOp::Abs:
            if (auto i = std::get_if<std::int64_t>(&v)) return *i < 0 ? -*i : *i;
            return std::fabs(num(v));
        }
        throw std::runtime_error("bad unary operator");
    }
    Value eval_node(const Expr&, const Binary& n) {
        if (n.op == BinaryOp::And) return truth(eval(n.lhs.get())) && truth(eval(n.rhs.get()));
        if (n.op == BinaryOp::Or) return truth(eval(n.lhs.get())) || truth(eval(n.rhs.get()));
        Value a = eval(n.lhs.get());
        Value b = eval(n.rhs.get());
        return binary(n.op, a, b);
    }
    Value eval_node(const Expr&, const InlineIf& n) {
        return truth(eval(n.cond.get())) ? eval(n.then_value.get()) : eval(n.else_value.get());
    }
    Value eval_node(const Expr& e, const Call& n) {
        std::vector<Value> args;
        for (const auto& a : n.args) args.push_back(eval(a.get()));
        switch (n.form) {
        case CallForm::Function: return invoke(find_function("", n.name), nullptr, args);
        case CallForm::ExternalFunction: return invoke(find_function(n.library, n.name), nullptr, args);
        case CallForm::Constructor: return construct(e.type.class_name(), args);
        case CallForm::Method: {
            Value recv = eval(n.receiver->get());
            auto obj = std::get<std::shared_ptr<Object>>(recv);
            const Method* m = find_method(obj->class_name, n.name);
            if (!m) throw std::runtime_error("unknown method " + n.name);
            return invoke(*m, obj, args);
        }
        case CallForm::SelfMethod: {
            auto self = selves_.back();
            const Method* m = find_method(self->class_name, n.name);
            if (!m) throw std::runtime_error("unknown method " + n.name);
            return invoke(*m, self, args);
        }
        }
        throw std::runtime_error("bad call");
    }
    Value eval_node(const Expr&, const MathCall& n) {
        double x = num(eval(n.arg.get()));
        switch (n.fn) {
        case MathFn::Sin: return std::sin(x);
        case MathFn::Cos: return std::cos(x);
        case MathFn::Tan: return std::tan(x);
        case MathFn::Floor: return std::floor(x);
        case MathFn::Ceil: return std::ceil(x);
        case MathFn::Exp: return std::exp(x);
        case MathFn::Log: return std::log(x);
        case MathFn::Sqrt: return std::sqrt(x);
        case MathFn::Abs: return std::fabs(x);
        }
        throw std::runtime_error("bad math function");
    }
    Value eval_node(const Expr& e, const ListLiteral& n) {
        auto l = std::make_shared<List>();
        bool floats = e.type.element().is(TypeKind::Float);
        for (const auto& x : n.elements) {
            Value v = eval(x.get());
            if (floats && std::holds_alternative<std::int64_t>(v)) v = num(v);
            l->items.push_back(std::move(v));
        }
        return l;
    }
    Value eval_node(const Expr&, const ArgsList&) {
        auto l = std::make_shared<List>();
        for (const auto& a : args_) l->items.emplace_back(a);
        return l;
    }
    Value eval_node(const Expr&, const ArgAt& n) {
        auto i = integer(eval(n.index.get()));
        if (i < 0 || static_cast<std::size_t>(i) >= args_.size()) throw ThrowSignal{"argument index out of range"};
        return args_[static_cast<std::size_t>(i)];
    }
    Value eval_node(const Expr&, const ArgExists& n) {
        auto i = integer(eval(n.index.get()));
        return i >= 0 && static_cast<std::size_t>(i) < args_.size();
    }
    Value eval_node(const Expr&, const ListAccess& n) {
        auto l = list(eval(n.list.get()));
        auto i = integer(eval(n.index.get()));
        if (i < 0 || static_cast<std::size_t>(i) >= l->items.size()) throw ThrowSignal{"list index out of range"};
        return l->items[static_cast<std::size_t>(i)];
    }
    Value eval_node(const Expr&, const ListSize& n) {
        return static_cast<std::int64_t>(list(eval(n.list.get()))->items.size());
    }
    Value eval_node(const Expr& e, const ListAppend& n) {
        auto l = list(eval(n.list.get()));
        Value v = eval(n.value.get());
        if (e.type.is_list() && e.type.element().is(TypeKind::Float) && std::holds_alternative<std::int64_t>(v)) v = num(v);
        l->items.push_back(std::move(v));
        return {};
    }
    Value eval_node(const Expr&, const ListIndexExists& n) {
        auto l = list(eval(n.list.get()));
        auto i = integer(eval(n.index.get()));
        return i >= 0 && static_cast<std::size_t>(i) < l->items.size();
    }
    Value eval_node(const Expr&, const IndexOf& n) {
        auto l = list(eval(n.list.get()));
        Value v = eval(n.value.get());
        for (std::size_t i = 0; i < l->items.size(); ++i) {
            if (equal(l->items[i], v)) return static_cast<std::int64_t>(i);
        }
        return std::int64_t{-1};
    }

    // Statements -------------------------------------------------------------------------

    void exec_body(const Body& b) {
        for (const auto& blk : b.blocks) {
            for (const auto& s : blk.stmts) exec(s);
        }
    }

    void exec(const Stmt& s) {
        std::visit([&](const auto& n) { exec_node(n); }, s.node);
    }

    static Value coerce_to(const Type& t, Value v) {
        if (t.is(TypeKind::Float) && std::holds_alternative<std::int64_t>(v)) return num(v);
        return v;
    }

    void exec_node(const VarDec& n) { frame()[n.var.name] = Value{}; }
    void exec_node(const VarDecDef& n) { frame()[n.var.name] = coerce_to(n.var.type, eval(n.value)); }
    void exec_node(const Assign& n) {
        Value& target = slot(n.target);
        switch (n.mode) {
        case AssignMode::Set: target = coerce_to(n.target.type, eval(*n.value)); break;
        case AssignMode::AddEq: {
            Value v = eval(*n.value);
            Value& t2 = slot(n.target);
            t2 = coerce_to(n.target.type, binary(BinaryOp::Add, t2, v));
            break;
        }
        case AssignMode::SubEq: {
            Value v = eval(*n.value);
            Value& t2 = slot(n.target);
            t2 = coerce_to(n.target.type, binary(BinaryOp::Sub, t2, v));
            break;
        }
        case AssignMode::Inc: target = binary(BinaryOp::Add, target, std::int64_t{1}); break;
        case AssignMode::Dec: target = binary(BinaryOp::Sub, target, std::int64_t{1}); break;
        }
    }
    void exec_node(const Return& n) { throw ReturnSignal{eval(n.value)}; }
    void exec_node(const Throw& n) { throw ThrowSignal{n.message}; }
    void exec_node(const Free& n) { frame().erase(n.var.name); }
    void exec_node(const Comment&) {}
    void exec_node(const Break&) { throw BreakSignal{}; }
    void exec_node(const Continue&) { throw ContinueSignal{}; }
    void exec_node(const ExprStmt& n) { eval(n.value); }
    void exec_node(const If& n) {
        for (const auto& br : n.branches) {
            if (truth(eval(br.cond))) {
                exec_body(br.body);
                return;
            }
        }
        if (n.else_body) exec_body(*n.else_body);
    }
    void exec_node(const Switch& n) {
        Value v = eval(n.scrutinee);
        for (const auto& c : n.cases) {
            if (equal(v, eval(c.label))) {
                run_loop_body(c.body);
                return;
            }
        }
        run_loop_body(n.default_body);
    }

    /// Runs a body, returning false when it ended with `break`.
    bool run_loop_body(const Body& b) {
        try {
            exec_body(b);
        } catch (const BreakSignal&) {
            return false;
        } catch (const ContinueSignal&) {
        }
        return true;
    }

    void exec_node(const For& n) {
        exec(n.init.get());
        while (truth(eval(n.cond))) {
            if (!run_loop_body(n.body)) break;
            exec(n.update.get());
        }
    }
    void exec_node(const ForRange& n) {
        Value i = eval(n.start);
        Value end = eval(n.end);
        Value step = eval(n.step);
        bool down = num(step) < 0;
        frame()[n.var.name] = i;
        while (down ? num(frame()[n.var.name]) >= num(end) : num(frame()[n.var.name]) <= num(end)) {
            if (!run_loop_body(n.body)) break;
            frame()[n.var.name] = binary(BinaryOp::Add, frame()[n.var.name], step);
        }
    }
    void exec_node(const ForEach& n) {
        auto l = list(eval(n.list));
        for (std::size_t i = 0; i < l->items.size(); ++i) {
            frame()[n.var.name] = l->items[i];
            if (!run_loop_body(n.body)) break;
        }
    }
    void exec_node(const While& n) {
        while (truth(eval(n.cond))) {
            if (!run_loop_body(n.body)) break;
        }
    }
    void exec_node(const TryCatch& n) {
        try {
            exec_body(n.try_body);
        } catch (const ThrowSignal&) {
            exec_body(n.catch_body);
        }
    }
    void exec_node(const ListSlice& n) {
        auto src = list(eval(n.source));
        std::int64_t size = static_cast<std::int64_t>(src->items.size());
        std::int64_t start = n.start ? integer(eval(*n.start)) : 0;
        std::int64_t end = n.end ? integer(eval(*n.end)) : size;
        std::int64_t step = n.step ? integer(eval(*n.step)) : 1;
        if (step <= 0) throw std::runtime_error("slices need a positive step");
        auto out = std::make_shared<List>();
        for (std::int64_t i = start; i < end && i < size; i += step) out->items.push_back(src->items[static_cast<std::size_t>(i)]);
        slot(n.target) = out;
    }
    void exec_node(const ListSet& n) {
        auto l = list(eval(n.list));
        auto i = integer(eval(n.index));
        Value v = eval(n.value);
        if (i < 0 || static_cast<std::size_t>(i) >= l->items.size()) throw ThrowSignal{"list index out of range"};
        Value& cell = l->items[static_cast<std::size_t>(i)];
        if (std::holds_alternative<double>(cell) && std::holds_alternative<std::int64_t>(v)) v = num(v);
        cell = std::move(v);
    }
    void exec_node(const Print& n) {
        result.out += show(eval(n.value));
        if (n.newline) result.out += "\n";
    }
    void exec_node(const Read& n) {
        std::string line;
        std::getline(in_, line);
        if (n.kind == ReadKind::Int) {
            slot(n.target) = static_cast<std::int64_t>(std::stoll(line));
        } else {
            slot(n.target) = line;
        }
    }
    void exec_node(const Inline& n) { exec_body(n.body); }
    void exec_node(const InitObserverList& n) {
        observers_ = std::make_shared<List>();
        for (const auto& e : n.initial) observers_->items.push_back(eval(e));
    }
    void exec_node(const AddObserver& n) {
        if (!observers_) throw std::runtime_error("observer list used before initialisation");
        observers_->items.push_back(eval(n.value));
    }
    void exec_node(const NotifyObservers& n) {
        if (!observers_) throw std::runtime_error("observer list used before initialisation");
        for (const auto& o : observers_->items) {
            auto obj = std::get<std::shared_ptr<Object>>(o);
            const Method* m = find_method(obj->class_name, n.method);
            if (!m) throw std::runtime_error("unknown observer method " + n.method);
            invoke(*m, obj, {});
        }
    }
    void exec_node(const InitState& n) { frame()[n.name] = n.label; }
    void exec_node(const ChangeState& n) { frame()[n.name] = n.label; }
    void exec_node(const CheckState& n) {
        const std::string& current = std::get<std::string>(frame()[n.name]);
        for (const auto& c : n.cases) {
            if (c.label == current) {
                exec_body(c.body);
                return;
            }
        }
        exec_body(n.fallback);
    }
    void exec_node(const InOutCall& n) {
        const Method& f = find_function(n.library, n.name);
        std::vector<Value> inouts, ins;
        for (const auto& v : n.inouts) inouts.push_back(slot(v));
        for (const auto& e : n.ins) ins.push_back(eval(e));
        std::vector<Value> results = invoke_in_out(f, inouts, ins);
        std::size_t k = 0;
        for (const auto& v : n.inouts) slot(v) = results.at(k++);
        for (const auto& v : n.outs) slot(v) = results.at(k++);
    }
};

} // namespace

std::string show(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "None";
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "True" : "False";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, double>) {
                return show_float(x);
            } else if constexpr (std::is_same_v<T, char>) {
                return std::string(1, x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else if constexpr (std::is_same_v<T, std::shared_ptr<List>>) {
                std::string out = "[";
                for (std::size_t i = 0; i < x->items.size(); ++i) {
                    if (i) out += ", ";
                    out += show(x->items[i]);
                }
                return out + "]";
            } else {
                return "<" + x->class_name + ">";
            }
        },
        v);
}

RunResult run(const Package& pkg, const std::vector<std::string>& args, const std::string& stdin_text) {
    Interp interp(pkg, args, stdin_text);
    interp.run_main();
    return interp.result;
}

std::vector<Value> call_in_out(const Package& pkg, const std::string& module, const std::string& name,
                               const std::vector<Value>& inouts, const std::vector<Value>& ins) {
    Interp interp(pkg, {}, {});
    return interp.in_out(module, name, inouts, ins);
}

} // namespace refi
