#include "forge/annotation_server.hpp"

#include "httplib.h"

namespace forge {

namespace {

using ojson = nlohmann::ordered_json;
using K = AnnotationError::Kind;

int status_for(K k) {
    switch (k) {
        case K::UnknownTask:
        case K::UnknownPool: return 404;
        case K::DuplicateAnnotator:
        case K::AlreadyJudged:
        case K::DuplicateVote:
        case K::PoolExhausted:
        case K::InsufficientRecords: return 409;
        case K::NotAssigned: return 403;
        default: return 400;
    }
}

void send(httplib::Response& res, const ojson& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json; charset=utf-8");
}

nlohmann::json body_of(const httplib::Request& req) {
    auto j = nlohmann::json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw AnnotationError(K::BadRequest, "body must be a JSON object");
    return j;
}

template <class T>
T field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name)) throw AnnotationError(K::BadRequest, std::string("missing field ") + name);
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw AnnotationError(K::BadRequest, std::string("bad field ") + name);
    }
}

ojson choices_json() {
    auto out = ojson::array();
    for (auto c : kAllFiner)
        out.push_back({{"id", id_of(c)}, {"display", display_name(c)}, {"broad", id_of(broad_of(c))}});
    return out;
}

ojson progress_json(const Progress& p) { return {{"done", p.done}, {"total", p.total}}; }

template <class F>
httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
        try {
            f(req, res);
        } catch (const AnnotationError& e) {
            send(res, {{"error", id_of(e.kind)}, {"detail", e.detail}}, status_for(e.kind));
        } catch (const std::exception& e) {
            send(res, {{"error", "Internal"}, {"detail", e.what()}}, 500);
        }
    };
}

}  // namespace

AnnotationServer::AnnotationServer(AnnotationStore& store, std::string ui_dir)
    : store_(store), http_(std::make_unique<httplib::Server>()) {
    auto& s = *http_;
    auto& st = store_;

    s.Get("/choices", guarded([](const auto&, auto& res) { send(res, {{"choices", choices_json()}}); }));

    s.Post("/pools", guarded([&st](const auto& req, auto& res) {
        auto b = body_of(req);
        const Pool& p = st.create_pool(field<std::size_t>(b, "n_correct"),
                                       field<std::size_t>(b, "n_wrong"),
                                       b.value("seed", std::uint64_t{0}));
        send(res,
             {{"pool_id", p.pool_id},
              {"size", p.record_ids.size()},
              {"n_correct", p.n_correct},
              {"n_wrong", p.n_wrong}},
             201);
    }));

    s.Post(R"(/pools/([^/]+)/assignments)", guarded([&st](const auto& req, auto& res) {
        auto b = body_of(req);
        auto a = st.assign(req.matches[1].str(), field<std::string>(b, "annotator"),
                           b.value("k", std::size_t{50}));
        send(res,
             {{"pool_id", a.pool_id},
              {"annotator", a.annotator},
              {"size", a.record_ids.size()},
              {"record_ids", a.record_ids}},
             201);
    }));

    // Serves only the sentence text; the generated label stays server-side.
    s.Get(R"(/assignments/([^/]+))", guarded([&st](const auto& req, auto& res) {
        auto who = req.matches[1].str();
        ojson out = {{"annotator", who}, {"progress", progress_json(st.progress(who))}};
        if (auto id = st.next_pending(who)) {
            out["next"] = {{"record_id", *id}, {"text", st.record(*id)->wrong}};
        } else {
            out["next"] = nullptr;
        }
        out["choices"] = choices_json();
        send(res, out);
    }));

    s.Post("/judgments", guarded([&st](const auto& req, auto& res) {
        auto b = body_of(req);
        auto p = st.record_judgment(field<std::string>(b, "annotator"),
                                    field<std::string>(b, "record_id"), field<std::string>(b, "label"));
        send(res, {{"ok", true}, {"progress", progress_json(p)}});
    }));

    s.Get("/validation/queue", guarded([&st](const auto& req, auto& res) {
        auto voter = req.get_param_value("voter");
        auto out = ojson::array();
        for (auto& id : st.validation_queue(voter)) {
            auto* r = st.record(id);
            out.push_back({{"task", id}, {"wrong", r->wrong}, {"correct", r->correct},
                           {"finer", id_of(r->finer)}});
        }
        send(res, {{"voter", voter}, {"tasks", out}});
    }));

    s.Post(R"(/validation/([^/]+)/votes)", guarded([&st](const auto& req, auto& res) {
        auto b = body_of(req);
        std::optional<std::string> corrected;
        if (b.contains("corrected") && !b["corrected"].is_null())
            corrected = field<std::string>(b, "corrected");
        auto t = st.vote(req.matches[1].str(), field<std::string>(b, "voter"),
                         field<bool>(b, "accept"), corrected);
        std::size_t accepts = 0;
        for (auto& v : t.votes) accepts += v.accept;
        send(res, {{"task", t.record_id},
                   {"verdict", id_of(t.verdict)},
                   {"accepts", accepts},
                   {"rejects", t.votes.size() - accepts}});
    }));

    s.Get("/reports/human", guarded([&st](const auto& req, auto& res) {
        auto full = human_report_json(st.report());
        if (!req.has_param("level")) return send(res, full);
        auto level = level_from_id(req.get_param_value("level"));
        if (!level) throw AnnotationError(K::BadRequest, "level must be binary, broad or finer");
        std::string l(id_of(*level));
        ojson out = {{"level", l}, {"summary", full["summary"][l]}};
        out["annotators"] = ojson::object();
        for (auto& [who, levels] : full["annotators"].items()) out["annotators"][who] = levels[l];
        send(res, out);
    }));

    if (!ui_dir.empty()) s.set_mount_point("/ui", ui_dir);
}

AnnotationServer::~AnnotationServer() { stop(); }

bool AnnotationServer::listen(const std::string& host, int port) { return http_->listen(host, port); }

int AnnotationServer::bind_any(const std::string& host) { return http_->bind_to_any_port(host); }

bool AnnotationServer::serve_bound() { return http_->listen_after_bind(); }

void AnnotationServer::stop() {
    if (http_) http_->stop();
}

void AnnotationServer::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace forge
