#include "gool/json_codec.hpp"

#include "gool/build.hpp"
#include "gool/error.hpp"
#include "gool/patterns.hpp"

namespace gool::json {

using nlohmann::json;

namespace {

// Spellings ------------------------------------------------------------------------------

template <typename E>
struct Names {
    E value;
    std::string_view name;
};

constexpr Names<UnaryOp> kUnaryNames[] = {
    {UnaryOp::Not, "not"}, {UnaryOp::Negate, "negate"}, {UnaryOp::Sqrt, "sqrt"}, {UnaryOp::Abs, "abs"}};
constexpr Names<BinaryOp> kBinaryNames[] = {
    {BinaryOp::And, "and"}, {BinaryOp::Or, "or"},   {BinaryOp::Lt, "lt"},   {BinaryOp::Le, "le"},
    {BinaryOp::Gt, "gt"},   {BinaryOp::Ge, "ge"},   {BinaryOp::Eq, "eq"},   {BinaryOp::Ne, "ne"},
    {BinaryOp::Add, "add"}, {BinaryOp::Sub, "sub"}, {BinaryOp::Mul, "mul"}, {BinaryOp::Div, "div"},
    {BinaryOp::Pow, "pow"}};
constexpr Names<CallForm> kCallNames[] = {{CallForm::Function, "function"},
                                          {CallForm::ExternalFunction, "external"},
                                          {CallForm::Constructor, "constructor"},
                                          {CallForm::Method, "method"},
                                          {CallForm::SelfMethod, "self"}};
constexpr Names<VarForm> kFormNames[] = {{VarForm::Plain, "plain"},
                                         {VarForm::External, "external"},
                                         {VarForm::ClassMember, "class"},
                                         {VarForm::ObjectMember, "object"},
                                         {VarForm::Self, "self"}};
constexpr Names<AssignMode> kAssignNames[] = {{AssignMode::Set, "set"},
                                              {AssignMode::AddEq, "addEq"},
                                              {AssignMode::SubEq, "subEq"},
                                              {AssignMode::Inc, "inc"},
                                              {AssignMode::Dec, "dec"}};
constexpr Names<TypeKind> kTypeNames[] = {{TypeKind::Void, "void"},     {TypeKind::Bool, "bool"},
                                          {TypeKind::Int, "int"},       {TypeKind::Float, "float"},
                                          {TypeKind::Char, "char"},     {TypeKind::String, "string"},
                                          {TypeKind::InFile, "infile"}, {TypeKind::OutFile, "outfile"}};

template <typename E, std::size_t N>
std::string name_of(const Names<E> (&table)[N], E value) {
    for (const auto& entry : table) {
        if (entry.value == value) return std::string(entry.name);
    }
    return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of_name(const Names<E> (&table)[N], std::string_view name) {
    for (const auto& entry : table) {
        if (entry.name == name) return entry.value;
    }
    return std::nullopt;
}

std::string scope_name(Scope s) { return s == Scope::Public ? "public" : "private"; }
std::string binding_name(Binding b) { return b == Binding::Static ? "static" : "dynamic"; }

// Encoding -------------------------------------------------------------------------------

json enc_type(const Type& t) {
    if (t.is_list()) return json{{"list", enc_type(t.element())}};
    if (t.is(TypeKind::Object)) return json{{"object", t.class_name()}};
    return name_of(kTypeNames, t.kind());
}

json enc_var(const Variable& v) {
    json j{{"name", v.name}, {"type", enc_type(v.type)}, {"form", name_of(kFormNames, v.form)},
           {"binding", binding_name(v.binding)}};
    if (!v.qualifier.empty()) j["qualifier"] = v.qualifier;
    if (v.owner) j["owner"] = enc_var(v.owner->get());
    return j;
}

json enc_expr(const Expr& e);

json enc_args(const std::vector<Box<Expr>>& args) {
    json out = json::array();
    for (const auto& a : args) out.push_back(enc_expr(a.get()));
    return out;
}

json enc_expr(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Literal>) {
                json j{{"op", "literal"}, {"type", enc_type(e.type)}};
                std::visit(
                    [&](const auto& v) {
                        using V = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<V, char>) {
                            j["value"] = std::string(1, v);
                        } else {
                            j["value"] = v;
                        }
                    },
                    n.value);
                return j;
            } else if constexpr (std::is_same_v<T, ValueOf>) {
                return json{{"op", "valueOf"}, {"var", enc_var(n.var)}};
            } else if constexpr (std::is_same_v<T, Unary>) {
                return json{{"op", "unary"}, {"operator", name_of(kUnaryNames, n.op)}, {"args", {enc_expr(n.operand.get())}}};
            } else if constexpr (std::is_same_v<T, Binary>) {
                return json{{"op", "binary"},
                            {"operator", name_of(kBinaryNames, n.op)},
                            {"args", {enc_expr(n.lhs.get()), enc_expr(n.rhs.get())}}};
            } else if constexpr (std::is_same_v<T, InlineIf>) {
                return json{{"op", "inlineIf"},
                            {"args", {enc_expr(n.cond.get()), enc_expr(n.then_value.get()), enc_expr(n.else_value.get())}}};
            } else if constexpr (std::is_same_v<T, Call>) {
                json j{{"op", "call"},
                       {"form", name_of(kCallNames, n.form)},
                       {"name", n.name},
                       {"type", enc_type(e.type)},
                       {"args", enc_args(n.args)}};
                if (!n.library.empty()) j["library"] = n.library;
                if (n.receiver) j["receiver"] = enc_expr(n.receiver->get());
                return j;
            } else if constexpr (std::is_same_v<T, MathCall>) {
                return json{{"op", "math"}, {"fn", std::string(to_string(n.fn))}, {"args", {enc_expr(n.arg.get())}}};
            } else if constexpr (std::is_same_v<T, ListLiteral>) {
                return json{{"op", "list"}, {"element", enc_type(e.type.element())}, {"args", enc_args(n.elements)}};
            } else if constexpr (std::is_same_v<T, ArgsList>) {
                return json{{"op", "argsList"}};
            } else if constexpr (std::is_same_v<T, ArgAt>) {
                return json{{"op", "argAt"}, {"args", {enc_expr(n.index.get())}}};
            } else if constexpr (std::is_same_v<T, ArgExists>) {
                return json{{"op", "argExists"}, {"args", {enc_expr(n.index.get())}}};
            } else if constexpr (std::is_same_v<T, ListAccess>) {
                return json{{"op", "listAccess"}, {"args", {enc_expr(n.list.get()), enc_expr(n.index.get())}}};
            } else if constexpr (std::is_same_v<T, ListSize>) {
                return json{{"op", "listSize"}, {"args", {enc_expr(n.list.get())}}};
            } else if constexpr (std::is_same_v<T, ListAppend>) {
                return json{{"op", "listAppend"}, {"args", {enc_expr(n.list.get()), enc_expr(n.value.get())}}};
            } else if constexpr (std::is_same_v<T, ListIndexExists>) {
                return json{{"op", "listIndexExists"}, {"args", {enc_expr(n.list.get()), enc_expr(n.index.get())}}};
            } else {
                return json{{"op", "indexOf"}, {"args", {enc_expr(n.list.get()), enc_expr(n.value.get())}}};
            }
        },
        e.node);
}

json enc_body(const Body& b);

json enc_vars(const std::vector<Variable>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(enc_var(v));
    return out;
}

json enc_stmt(const Stmt& s) {
    return std::visit(
        [&](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarDec>) {
                return json{{"stmt", "varDec"}, {"var", enc_var(n.var)}};
            } else if constexpr (std::is_same_v<T, VarDecDef>) {
                return json{{"stmt", "varDecDef"}, {"var", enc_var(n.var)}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, Assign>) {
                json j{{"stmt", "assign"}, {"mode", name_of(kAssignNames, n.mode)}, {"var", enc_var(n.target)}};
                if (n.value) j["value"] = enc_expr(*n.value);
                return j;
            } else if constexpr (std::is_same_v<T, Return>) {
                return json{{"stmt", "return"}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, Throw>) {
                return json{{"stmt", "throw"}, {"message", n.message}};
            } else if constexpr (std::is_same_v<T, Free>) {
                return json{{"stmt", "free"}, {"var", enc_var(n.var)}};
            } else if constexpr (std::is_same_v<T, Comment>) {
                return json{{"stmt", "comment"}, {"text", n.text}};
            } else if constexpr (std::is_same_v<T, Break>) {
                return json{{"stmt", "break"}};
            } else if constexpr (std::is_same_v<T, Continue>) {
                return json{{"stmt", "continue"}};
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                return json{{"stmt", "expr"}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, If>) {
                json branches = json::array();
                for (const auto& br : n.branches) branches.push_back({{"cond", enc_expr(br.cond)}, {"body", enc_body(br.body)}});
                json j{{"stmt", "if"}, {"branches", branches}};
                if (n.else_body) j["else"] = enc_body(*n.else_body);
                return j;
            } else if constexpr (std::is_same_v<T, Switch>) {
                json cases = json::array();
                for (const auto& c : n.cases) cases.push_back({{"label", enc_expr(c.label)}, {"body", enc_body(c.body)}});
                return json{{"stmt", "switch"},
                            {"scrutinee", enc_expr(n.scrutinee)},
                            {"cases", cases},
                            {"default", enc_body(n.default_body)}};
            } else if constexpr (std::is_same_v<T, For>) {
                return json{{"stmt", "for"},
                            {"init", enc_stmt(n.init.get())},
                            {"cond", enc_expr(n.cond)},
                            {"update", enc_stmt(n.update.get())},
                            {"body", enc_body(n.body)}};
            } else if constexpr (std::is_same_v<T, ForRange>) {
                return json{{"stmt", "forRange"}, {"var", enc_var(n.var)},     {"start", enc_expr(n.start)},
                            {"end", enc_expr(n.end)}, {"step", enc_expr(n.step)}, {"body", enc_body(n.body)}};
            } else if constexpr (std::is_same_v<T, ForEach>) {
                return json{{"stmt", "forEach"}, {"var", enc_var(n.var)}, {"list", enc_expr(n.list)}, {"body", enc_body(n.body)}};
            } else if constexpr (std::is_same_v<T, While>) {
                return json{{"stmt", "while"}, {"cond", enc_expr(n.cond)}, {"body", enc_body(n.body)}};
            } else if constexpr (std::is_same_v<T, TryCatch>) {
                return json{{"stmt", "tryCatch"}, {"try", enc_body(n.try_body)}, {"catch", enc_body(n.catch_body)}};
            } else if constexpr (std::is_same_v<T, ListSlice>) {
                json j{{"stmt", "listSlice"}, {"var", enc_var(n.target)}, {"source", enc_expr(n.source)}};
                if (n.start) j["start"] = enc_expr(*n.start);
                if (n.end) j["end"] = enc_expr(*n.end);
                if (n.step) j["step"] = enc_expr(*n.step);
                return j;
            } else if constexpr (std::is_same_v<T, ListSet>) {
                return json{{"stmt", "listSet"}, {"list", enc_expr(n.list)}, {"index", enc_expr(n.index)}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, Print>) {
                return json{{"stmt", "print"}, {"newline", n.newline}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, Read>) {
                return json{{"stmt", "read"}, {"kind", n.kind == ReadKind::Int ? "int" : "line"}, {"var", enc_var(n.target)}};
            } else if constexpr (std::is_same_v<T, Inline>) {
                return json{{"stmt", "inline"}, {"body", enc_body(n.body)}};
            } else if constexpr (std::is_same_v<T, InitObserverList>) {
                json values = json::array();
                for (const auto& v : n.initial) values.push_back(enc_expr(v));
                return json{{"stmt", "initObserverList"}, {"element", enc_type(n.element)}, {"values", values}};
            } else if constexpr (std::is_same_v<T, AddObserver>) {
                return json{{"stmt", "addObserver"}, {"value", enc_expr(n.value)}};
            } else if constexpr (std::is_same_v<T, NotifyObservers>) {
                return json{{"stmt", "notifyObservers"}, {"method", n.method}, {"element", enc_type(n.element)}};
            } else if constexpr (std::is_same_v<T, InitState>) {
                return json{{"stmt", "initState"}, {"name", n.name}, {"label", n.label}};
            } else if constexpr (std::is_same_v<T, ChangeState>) {
                return json{{"stmt", "changeState"}, {"name", n.name}, {"label", n.label}};
            } else if constexpr (std::is_same_v<T, CheckState>) {
                json cases = json::array();
                for (const auto& c : n.cases) cases.push_back({{"label", c.label}, {"body", enc_body(c.body)}});
                return json{{"stmt", "checkState"}, {"name", n.name}, {"cases", cases}, {"fallback", enc_body(n.fallback)}};
            } else {
                static_assert(std::is_same_v<T, InOutCall>);
                json ins = json::array();
                for (const auto& e : n.ins) ins.push_back(enc_expr(e));
                json j{{"stmt", "inOutCall"}, {"name", n.name}, {"ins", ins}, {"outs", enc_vars(n.outs)},
                       {"inouts", enc_vars(n.inouts)}};
                if (!n.library.empty()) j["library"] = n.library;
                return j;
            }
        },
        s.node);
}

json enc_body(const Body& b) {
    json out = json::array();
    for (const auto& blk : b.blocks) {
        json stmts = json::array();
        for (const auto& s : blk.stmts) stmts.push_back(enc_stmt(s));
        out.push_back(stmts);
    }
    return out;
}

json enc_doc(const DocSpec& d) {
    json params = json::array();
    for (const auto& [name, text] : d.params) params.push_back({{"name", name}, {"text", text}});
    json j{{"description", d.description}, {"params", params}};
    if (d.returns) j["returns"] = *d.returns;
    return j;
}

json enc_method(const Method& m) {
    json params = json::array();
    for (const auto& p : m.params) params.push_back({{"var", enc_var(p.var)}, {"byRef", p.by_reference}});
    json j{{"name", m.name},
           {"scope", scope_name(m.scope)},
           {"binding", binding_name(m.binding)},
           {"returnType", enc_type(m.return_type)},
           {"params", params},
           {"body", enc_body(m.body)}};
    if (m.is_main) j["main"] = true;
    if (m.is_constructor) j["constructor"] = true;
    if (m.in_out) {
        j["inOut"] = {{"ins", enc_vars(m.in_out->ins)}, {"outs", enc_vars(m.in_out->outs)},
                      {"inouts", enc_vars(m.in_out->inouts)}};
    }
    if (m.doc) j["doc"] = enc_doc(*m.doc);
    return j;
}

json enc_class(const ClassDecl& c) {
    json svs = json::array();
    for (const auto& sv : c.state_vars) {
        json j{{"scope", scope_name(sv.scope)}, {"binding", binding_name(sv.binding)}, {"const", sv.is_const},
               {"var", enc_var(sv.var)}};
        if (sv.initial) j["initial"] = enc_expr(*sv.initial);
        svs.push_back(j);
    }
    json methods = json::array();
    for (const auto& m : c.methods) methods.push_back(enc_method(m));
    json j{{"name", c.name}, {"scope", scope_name(c.scope)}, {"stateVars", svs}, {"methods", methods}};
    if (c.parent) j["parent"] = *c.parent;
    if (c.doc) j["doc"] = enc_doc(*c.doc);
    return j;
}

// Decoding -------------------------------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::DecodeError, "at " + (path.empty() ? std::string("/") : path) + ": " + message);
}

/// Runs a builder, relocating any build-time error to the JSON path.
template <typename F>
auto built(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DecodeError) throw;
        fail(path, e.what());
    }
}

const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const json* optional_field(const json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

std::string str(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_string()) fail(child(path, key), "expected a string");
    return v.get<std::string>();
}

bool flag(const json& j, const char* key) {
    const json* v = optional_field(j, key);
    return v && v->is_boolean() && v->get<bool>();
}

const json& array(const json& j, const std::string& path, const char* key) {
    const json& v = field(j, path, key);
    if (!v.is_array()) fail(child(path, key), "expected an array");
    return v;
}

template <typename E, std::size_t N>
E enum_field(const json& j, const std::string& path, const char* key, const Names<E> (&table)[N]) {
    std::string s = str(j, path, key);
    auto v = value_of_name(table, s);
    if (!v) fail(child(path, key), "unknown value \"" + s + "\"");
    return *v;
}

Scope dec_scope(const json& j, const std::string& path) {
    std::string s = str(j, path, "scope");
    if (s == "public") return Scope::Public;
    if (s == "private") return Scope::Private;
    fail(child(path, "scope"), "unknown scope \"" + s + "\"");
}

Binding dec_binding(const json& j, const std::string& path) {
    const json* b = optional_field(j, "binding");
    if (!b) return Binding::Dynamic;
    if (*b == "static") return Binding::Static;
    if (*b == "dynamic") return Binding::Dynamic;
    fail(child(path, "binding"), "unknown binding");
}

Type dec_type(const json& j, const std::string& path) {
    if (j.is_string()) {
        auto k = value_of_name(kTypeNames, j.get<std::string>());
        if (!k) fail(path, "unknown type \"" + j.get<std::string>() + "\"");
        return type_of(*k);
    }
    if (j.is_object() && j.contains("list")) return Type::list(dec_type(j["list"], child(path, "list")));
    if (j.is_object() && j.contains("object")) {
        return built(path, [&] { return Type::object(str(j, path, "object")); });
    }
    fail(path, "expected a type");
}

Variable dec_var(const json& j, const std::string& path) {
    std::string name = str(j, path, "name");
    Type type = dec_type(field(j, path, "type"), child(path, "type"));
    VarForm form = optional_field(j, "form") ? enum_field(j, path, "form", kFormNames) : VarForm::Plain;
    Binding binding = dec_binding(j, path);
    return built(path, [&] {
        Variable v;
        switch (form) {
        case VarForm::Plain: v = var(name, type); break;
        case VarForm::External: v = ext_var(str(j, path, "qualifier"), name, type); break;
        case VarForm::ClassMember: v = class_var(str(j, path, "qualifier"), name, type); break;
        case VarForm::ObjectMember: v = obj_var(dec_var(field(j, path, "owner"), child(path, "owner")), name, type); break;
        case VarForm::Self: v = self_var(name, type); break;
        }
        return with_binding(v, binding);
    });
}

std::vector<Variable> dec_vars(const json& j, const std::string& path, const char* key) {
    std::vector<Variable> out;
    const json& a = array(j, path, key);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(dec_var(a[i], child(child(path, key), i)));
    return out;
}

Expr dec_expr(const json& j, const std::string& path);

std::vector<Expr> dec_exprs(const json& j, const std::string& path, const char* key, std::optional<std::size_t> count = {}) {
    const json& a = array(j, path, key);
    if (count && a.size() != *count) {
        fail(child(path, key), "expected " + std::to_string(*count) + " operands, got " + std::to_string(a.size()));
    }
    std::vector<Expr> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(dec_expr(a[i], child(child(path, key), i)));
    return out;
}

Expr dec_literal(const json& j, const std::string& path) {
    Type t = dec_type(field(j, path, "type"), child(path, "type"));
    const json& v = field(j, path, "value");
    std::string vp = child(path, "value");
    switch (t.kind()) {
    case TypeKind::Bool:
        if (!v.is_boolean()) fail(vp, "expected a boolean");
        return lit_bool(v.get<bool>());
    case TypeKind::Int:
        if (!v.is_number_integer()) fail(vp, "expected an integer");
        return lit_int(v.get<std::int64_t>());
    case TypeKind::Float:
        if (!v.is_number()) fail(vp, "expected a number");
        return built(path, [&] { return lit_float(v.get<double>()); });
    case TypeKind::Char:
        if (!v.is_string() || v.get<std::string>().size() != 1) fail(vp, "expected a one-character string");
        return lit_char(v.get<std::string>()[0]);
    case TypeKind::String:
        if (!v.is_string()) fail(vp, "expected a string");
        return lit_string(v.get<std::string>());
    default: fail(child(path, "type"), "no literals of type " + t.describe());
    }
}

Expr dec_expr(const json& j, const std::string& path) {
    std::string op = str(j, path, "op");
    auto args = [&](std::size_t n) { return dec_exprs(j, path, "args", n); };
    return built(path, [&]() -> Expr {
        if (op == "literal") return dec_literal(j, path);
        if (op == "valueOf") return value_of(dec_var(field(j, path, "var"), child(path, "var")));
        if (op == "unary") {
            auto a = args(1);
            return apply_unary(enum_field(j, path, "operator", kUnaryNames), a[0]);
        }
        if (op == "binary") {
            auto a = args(2);
            return apply_binary(enum_field(j, path, "operator", kBinaryNames), a[0], a[1]);
        }
        if (op == "inlineIf") {
            auto a = args(3);
            return inline_if(a[0], a[1], a[2]);
        }
        if (op == "call") {
            CallForm form = enum_field(j, path, "form", kCallNames);
            std::string name = str(j, path, "name");
            Type type = dec_type(field(j, path, "type"), child(path, "type"));
            auto a = dec_exprs(j, path, "args");
            switch (form) {
            case CallForm::Function: return func_app(name, type, a);
            case CallForm::ExternalFunction: return ext_func_app(str(j, path, "library"), name, type, a);
            case CallForm::Constructor: return new_obj(type, a);
            case CallForm::Method:
                return obj_method_call(dec_expr(field(j, path, "receiver"), child(path, "receiver")), name, type, a);
            case CallForm::SelfMethod: return self_func_app(name, type, a);
            }
        }
        if (op == "math") {
            std::string fn = str(j, path, "fn");
            auto parsed = parse_math_fn(fn);
            if (!parsed) fail(child(path, "fn"), "unknown function \"" + fn + "\"");
            return math_fn(*parsed, args(1)[0]);
        }
        if (op == "list") {
            return lit_list(dec_type(field(j, path, "element"), child(path, "element")), dec_exprs(j, path, "args"));
        }
        if (op == "argsList") return args_list();
        if (op == "argAt") return arg_at(args(1)[0]);
        if (op == "argExists") return arg_exists(args(1)[0]);
        if (op == "listAccess") {
            auto a = args(2);
            return list_access(a[0], a[1]);
        }
        if (op == "listSize") return list_size(args(1)[0]);
        if (op == "listAppend") {
            auto a = args(2);
            return list_append(a[0], a[1]);
        }
        if (op == "listIndexExists") {
            auto a = args(2);
            return list_index_exists(a[0], a[1]);
        }
        if (op == "indexOf") {
            auto a = args(2);
            return index_of(a[0], a[1]);
        }
        fail(child(path, "op"), "unknown expression \"" + op + "\"");
    });
}

Body dec_body(const json& j, const std::string& path);

Stmt dec_stmt(const json& j, const std::string& path) {
    std::string kind = str(j, path, "stmt");
    auto e = [&](const char* key) { return dec_expr(field(j, path, key), child(path, key)); };
    auto v = [&](const char* key) { return dec_var(field(j, path, key), child(path, key)); };
    auto b = [&](const char* key) { return dec_body(field(j, path, key), child(path, key)); };
    auto opt_e = [&](const char* key) -> std::optional<Expr> {
        if (!optional_field(j, key)) return std::nullopt;
        return e(key);
    };
    return built(path, [&]() -> Stmt {
        if (kind == "varDec") return var_dec(v("var"));
        if (kind == "varDecDef") return var_dec_def(v("var"), e("value"));
        if (kind == "assign") {
            AssignMode mode = enum_field(j, path, "mode", kAssignNames);
            Variable target = v("var");
            switch (mode) {
            case AssignMode::Set: return assign(target, e("value"));
            case AssignMode::AddEq: return add_assign(target, e("value"));
            case AssignMode::SubEq: return sub_assign(target, e("value"));
            case AssignMode::Inc: return increment(target);
            case AssignMode::Dec: return decrement(target);
            }
        }
        if (kind == "return") return return_stmt(e("value"));
        if (kind == "throw") return throw_stmt(str(j, path, "message"));
        if (kind == "free") return free_stmt(v("var"));
        if (kind == "comment") return comment(str(j, path, "text"));
        if (kind == "break") return break_stmt();
        if (kind == "continue") return continue_stmt();
        if (kind == "expr") return expr_stmt(e("value"));
        if (kind == "if") {
            std::vector<std::pair<Expr, Body>> branches;
            const json& a = array(j, path, "branches");
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string p = child(child(path, "branches"), i);
                branches.emplace_back(dec_expr(field(a[i], p, "cond"), child(p, "cond")),
                                      dec_body(field(a[i], p, "body"), child(p, "body")));
            }
            if (optional_field(j, "else")) return if_cond(std::move(branches), b("else"));
            return if_no_else(std::move(branches));
        }
        if (kind == "switch") {
            std::vector<std::pair<Expr, Body>> cases;
            const json& a = array(j, path, "cases");
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string p = child(child(path, "cases"), i);
                cases.emplace_back(dec_expr(field(a[i], p, "label"), child(p, "label")),
                                   dec_body(field(a[i], p, "body"), child(p, "body")));
            }
            return switch_stmt(e("scrutinee"), std::move(cases), b("default"));
        }
        if (kind == "for") {
            return for_loop(dec_stmt(field(j, path, "init"), child(path, "init")), e("cond"),
                            dec_stmt(field(j, path, "update"), child(path, "update")), b("body"));
        }
        if (kind == "forRange") return for_range(v("var"), e("start"), e("end"), e("step"), b("body"));
        if (kind == "forEach") return for_each(v("var"), e("list"), b("body"));
        if (kind == "while") return while_loop(e("cond"), b("body"));
        if (kind == "tryCatch") return try_catch(b("try"), b("catch"));
        if (kind == "listSlice") return list_slice(v("var"), e("source"), opt_e("start"), opt_e("end"), opt_e("step"));
        if (kind == "listSet") return list_set(e("list"), e("index"), e("value"));
        if (kind == "print") {
            Stmt s = print(e("value"));
            std::get<Print>(s.node).newline = flag(j, "newline");
            return s;
        }
        if (kind == "read") {
            std::string rk = str(j, path, "kind");
            if (rk == "int") return read_int(v("var"));
            if (rk == "line") return read_line(v("var"));
            fail(child(path, "kind"), "unknown read kind \"" + rk + "\"");
        }
        if (kind == "inline") return Stmt{Inline{b("body")}};
        if (kind == "initObserverList") {
            return init_observer_list(dec_type(field(j, path, "element"), child(path, "element")),
                                      dec_exprs(j, path, "values"));
        }
        if (kind == "addObserver") return add_observer(e("value"));
        if (kind == "notifyObservers") {
            return notify_observers(str(j, path, "method"), dec_type(field(j, path, "element"), child(path, "element")));
        }
        if (kind == "initState") return init_state(str(j, path, "name"), str(j, path, "label"));
        if (kind == "changeState") return change_state(str(j, path, "name"), str(j, path, "label"));
        if (kind == "checkState") {
            std::vector<std::pair<std::string, Body>> cases;
            const json& a = array(j, path, "cases");
            for (std::size_t i = 0; i < a.size(); ++i) {
                std::string p = child(child(path, "cases"), i);
                cases.emplace_back(str(a[i], p, "label"), dec_body(field(a[i], p, "body"), child(p, "body")));
            }
            return check_state(str(j, path, "name"), std::move(cases), b("fallback"));
        }
        if (kind == "inOutCall") {
            InOutCall call;
            call.name = str(j, path, "name");
            require_identifier(call.name, "inOutCall target");
            if (optional_field(j, "library")) call.library = str(j, path, "library");
            call.ins = dec_exprs(j, path, "ins");
            call.outs = dec_vars(j, path, "outs");
            call.inouts = dec_vars(j, path, "inouts");
            return Stmt{std::move(call)};
        }
        fail(child(path, "stmt"), "unknown statement \"" + kind + "\"");
    });
}

Body dec_body(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of blocks");
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string bp = child(path, i);
        if (!j[i].is_array()) fail(bp, "expected an array of statements");
        std::vector<Stmt> stmts;
        for (std::size_t k = 0; k < j[i].size(); ++k) stmts.push_back(dec_stmt(j[i][k], child(bp, k)));
        blocks.push_back(block(std::move(stmts)));
    }
    return body(std::move(blocks));
}

std::optional<DocSpec> dec_doc(const json& j, const std::string& path) {
    const json* d = optional_field(j, "doc");
    if (!d) return std::nullopt;
    std::string dp = child(path, "doc");
    DocSpec doc;
    doc.description = str(*d, dp, "description");
    const json& params = array(*d, dp, "params");
    for (std::size_t i = 0; i < params.size(); ++i) {
        std::string pp = child(child(dp, "params"), i);
        doc.params.emplace_back(str(params[i], pp, "name"), str(params[i], pp, "text"));
    }
    if (optional_field(*d, "returns")) doc.returns = str(*d, dp, "returns");
    return doc;
}

Method dec_method(const json& j, const std::string& path, const std::optional<std::string>& cls) {
    std::string name = str(j, path, "name");
    Scope scope = dec_scope(j, path);
    Binding binding = dec_binding(j, path);
    Type ret = dec_type(field(j, path, "returnType"), child(path, "returnType"));
    Body b = dec_body(field(j, path, "body"), child(path, "body"));
    std::vector<Param> params;
    const json& ps = array(j, path, "params");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::string pp = child(child(path, "params"), i);
        Variable pv = dec_var(field(ps[i], pp, "var"), child(pp, "var"));
        params.push_back(flag(ps[i], "byRef") ? pointer_param(pv) : param(pv));
    }
    return built(path, [&]() -> Method {
        Method m;
        if (const json* io = optional_field(j, "inOut")) {
            std::string ip = child(path, "inOut");
            m = in_out_func(name, scope, binding, dec_vars(*io, ip, "ins"), dec_vars(*io, ip, "outs"),
                            dec_vars(*io, ip, "inouts"), b);
            if (cls) m.containing_class = cls;
        } else if (flag(j, "main")) {
            m = main_function(b);
        } else if (flag(j, "constructor")) {
            if (!cls) fail(path, "constructor outside a class");
            m = constructor(*cls, params, b);
            m.scope = scope;
        } else if (cls) {
            m = method(*cls, name, scope, binding, ret, params, b);
        } else {
            m = function(name, scope, binding, ret, params, b);
        }
        if (auto doc = dec_doc(j, path)) m = doc_func(doc->description, doc->params, doc->returns, std::move(m));
        return m;
    });
}

ClassDecl dec_class(const json& j, const std::string& path) {
    std::string name = str(j, path, "name");
    std::optional<std::string> parent;
    if (optional_field(j, "parent")) parent = str(j, path, "parent");
    std::vector<StateVar> svs;
    const json& a = array(j, path, "stateVars");
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string sp = child(child(path, "stateVars"), i);
        Variable v = dec_var(field(a[i], sp, "var"), child(sp, "var"));
        std::optional<Expr> init;
        if (const json* ij = optional_field(a[i], "initial")) init = dec_expr(*ij, child(sp, "initial"));
        Scope scope = dec_scope(a[i], sp);
        Binding binding = dec_binding(a[i], sp);
        svs.push_back(built(sp, [&] {
            if (flag(a[i], "const")) {
                if (!init) fail(sp, "constant state variable needs an initial value");
                return const_var(scope, binding, v, *init);
            }
            return state_var(scope, binding, v, init);
        }));
    }
    std::vector<Method> methods;
    const json& ms = array(j, path, "methods");
    for (std::size_t i = 0; i < ms.size(); ++i) methods.push_back(dec_method(ms[i], child(child(path, "methods"), i), name));
    Scope scope = dec_scope(j, path);
    return built(path, [&] {
        ClassDecl c = build_class(name, parent, scope, svs, methods);
        if (auto doc = dec_doc(j, path)) c = doc_class(doc->description, std::move(c));
        return c;
    });
}

Module dec_module(const json& j, const std::string& path) {
    std::string name = str(j, path, "name");
    std::vector<std::string> imports;
    if (const json* im = optional_field(j, "imports")) {
        if (!im->is_array()) fail(child(path, "imports"), "expected an array");
        for (std::size_t i = 0; i < im->size(); ++i) {
            if (!(*im)[i].is_string()) fail(child(child(path, "imports"), i), "expected a string");
            imports.push_back((*im)[i].get<std::string>());
        }
    }
    std::vector<Method> functions;
    const json& fs = array(j, path, "functions");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        functions.push_back(dec_method(fs[i], child(child(path, "functions"), i), std::nullopt));
    }
    std::vector<ClassDecl> classes;
    const json& cs = array(j, path, "classes");
    for (std::size_t i = 0; i < cs.size(); ++i) classes.push_back(dec_class(cs[i], child(child(path, "classes"), i)));
    return built(path, [&] {
        Module m = build_module(name, imports, functions, classes);
        if (auto doc = dec_doc(j, path)) m = doc_mod(doc->description, std::move(m));
        return m;
    });
}

} // namespace

json encode(const Package& pkg) {
    json modules = json::array();
    for (const auto& m : pkg.modules) {
        json functions = json::array();
        for (const auto& f : m.functions) functions.push_back(enc_method(f));
        json classes = json::array();
        for (const auto& c : m.classes) classes.push_back(enc_class(c));
        json jm{{"name", m.name}, {"imports", m.imports}, {"functions", functions}, {"classes", classes}};
        if (m.doc) jm["doc"] = enc_doc(*m.doc);
        modules.push_back(jm);
    }
    json aux = json::array();
    for (const auto& a : pkg.aux_files) {
        if (a.kind == AuxKind::Makefile) {
            aux.push_back({{"kind", "makefile"}, {"docRule", a.with_doc_rule}});
        } else {
            aux.push_back({{"kind", "doxConfig"}});
        }
    }
    return json{{"version", kFormatVersion}, {"program", {{"name", pkg.name}, {"modules", modules}}}, {"aux", aux}};
}

std::string encode_text(const Package& pkg) { return encode(pkg).dump(2) + "\n"; }

Package decode(const json& doc) {
    if (!doc.is_object()) fail("", "expected a package object");
    const json* version = optional_field(doc, "version");
    if (!version) fail("", "missing field \"version\"");
    if (!version->is_number_integer() || version->get<int>() != kFormatVersion) {
        fail("/version", "unsupported format version " + version->dump());
    }
    const json& program = field(doc, "", "program");
    std::string name = str(program, "/program", "name");
    std::vector<Module> modules;
    const json& ms = array(program, "/program", "modules");
    for (std::size_t i = 0; i < ms.size(); ++i) modules.push_back(dec_module(ms[i], child("/program/modules", i)));
    std::vector<AuxFileSpec> aux;
    if (const json* a = optional_field(doc, "aux")) {
        if (!a->is_array()) fail("/aux", "expected an array");
        for (std::size_t i = 0; i < a->size(); ++i) {
            std::string ap = child("/aux", i);
            std::string kind = str((*a)[i], ap, "kind");
            if (kind == "makefile") {
                aux.push_back(makefile(flag((*a)[i], "docRule")));
            } else if (kind == "doxConfig") {
                aux.push_back(dox_config());
            } else {
                fail(child(ap, "kind"), "unknown auxiliary file \"" + kind + "\"");
            }
        }
    }
    return built("", [&] { return package(prog(name, modules), aux); });
}

Package decode_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::DecodeError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return decode(doc);
}

} // namespace gool::json
