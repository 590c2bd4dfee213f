//! HTTP front for the kernel: a model store with revisions, mutation ops,
//! display lists, ghost previews and catalog queries.
//!
//! Every accepted op appends a revision, so `GET /models/:id/display?rev=r`
//! regenerates from the stored model at `r` and always answers the same.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use podosnova::catalog::Family;
use podosnova::drafting::{generate_plan_display, DisplayList, DraftError, PlanOptions};
use podosnova::model::{EntityId, OpeningParams, Point, SnapResult};
use podosnova::section::SectionError;
use podosnova::{generate_section_display, load_text, save_text, Catalog, IoError, Model, ModelError, Op, SectionSpec};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

pub const REVISION_HEADER: &str = "x-podo-revision";

/// All revisions of one model, oldest first.
struct Entry {
    revisions: Vec<Model>,
}

impl Entry {
    fn rev(&self) -> u64 {
        self.revisions.len() as u64 - 1
    }

    fn head(&self) -> &Model {
        self.revisions.last().expect("at least one revision")
    }
}

#[derive(Clone)]
pub struct AppState {
    catalog: Arc<Catalog>,
    models: Arc<RwLock<HashMap<u64, Arc<Mutex<Entry>>>>>,
    next_id: Arc<Mutex<u64>>,
}

impl AppState {
    pub fn new(catalog: Catalog) -> Self {
        AppState { catalog: Arc::new(catalog), models: Default::default(), next_id: Arc::new(Mutex::new(1)) }
    }

    fn entry(&self, id: u64) -> Result<Arc<Mutex<Entry>>, ApiError> {
        self.models.read().unwrap().get(&id).cloned().ok_or_else(|| ApiError::not_found(format!("no model {id}")))
    }

    /// Adds a model as revision 0 and returns its id.
    pub fn insert(&self, model: Model) -> u64 {
        let id = {
            let mut n = self.next_id.lock().unwrap();
            let id = *n;
            *n += 1;
            id
        };
        self.models.write().unwrap().insert(id, Arc::new(Mutex::new(Entry { revisions: vec![model] })));
        id
    }

    /// Committed model at `rev`, or the latest.
    fn snapshot(&self, id: u64, rev: Option<u64>) -> Result<(Model, u64), ApiError> {
        let entry = self.entry(id)?;
        let e = entry.lock().unwrap();
        let r = rev.unwrap_or(e.rev());
        let m = e.revisions.get(r as usize).ok_or_else(|| ApiError::not_found(format!("model {id} has no revision {r}")))?;
        Ok((m.clone(), r))
    }
}

/// Error responses: `{"error": {"code": .., "message": .., ..}}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: serde_json::Value,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        ApiError { status, body: json!({ "error": { "code": code, "message": message.into() } }) }
    }

    fn not_found(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::NOT_FOUND, "NotFound", message)
    }

    fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "SchemaError", message)
    }

    fn with(mut self, key: &str, value: serde_json::Value) -> Self {
        self.body["error"][key] = value;
        self
    }
}

impl From<ModelError> for ApiError {
    fn from(e: ModelError) -> Self {
        let status = match e {
            ModelError::UnknownEntity(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        let entity = e.entity().map(|x| json!(x.0)).unwrap_or(serde_json::Value::Null);
        ApiError::new(status, e.code(), e.to_string()).with("entity", entity)
    }
}

impl From<IoError> for ApiError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Integrity { source, .. } => source.into(),
            IoError::Schema { ref path, .. } => ApiError::bad_request(e.to_string()).with("path", json!(path)),
            other => ApiError::new(StatusCode::BAD_REQUEST, other.code(), other.to_string()),
        }
    }
}

impl From<DraftError> for ApiError {
    fn from(e: DraftError) -> Self {
        match e {
            DraftError::Model(m) => m.into(),
            DraftError::UnknownEntity(id) => ModelError::UnknownEntity(id).into(),
            other => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "TooFewAxes", other.to_string()),
        }
    }
}

impl From<SectionError> for ApiError {
    fn from(e: SectionError) -> Self {
        match e {
            SectionError::Model(m) => m.into(),
            SectionError::DanglingPlanRef(_) => ApiError::new(StatusCode::NOT_FOUND, e.code(), e.to_string()),
            other => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, other.code(), other.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

/// JSON bodies are parsed by hand so that malformed input is a 400.
fn parse<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    let de = &mut serde_json::Deserializer::from_slice(body);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        ApiError::bad_request(e.inner().to_string()).with("path", json!(path))
    })
}

fn text_doc(m: &Model, rev: u64) -> Response {
    let mut r = ([(header::CONTENT_TYPE, "application/json")], save_text(m)).into_response();
    r.headers_mut().insert(REVISION_HEADER, HeaderValue::from(rev));
    r
}

#[derive(Serialize)]
struct Created {
    id: u64,
    rev: u64,
}

async fn create_model(State(s): State<AppState>, body: Bytes) -> Result<Response, ApiError> {
    let text = std::str::from_utf8(&body).map_err(|_| ApiError::bad_request("body is not UTF-8"))?;
    let model = load_text(text)?;
    let id = s.insert(model);
    Ok((StatusCode::CREATED, Json(Created { id, rev: 0 })).into_response())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RevQuery {
    rev: Option<u64>,
}

async fn get_model(State(s): State<AppState>, Path(id): Path<u64>, Query(q): Query<RevQuery>) -> Result<Response, ApiError> {
    let (m, rev) = s.snapshot(id, q.rev)?;
    Ok(text_doc(&m, rev))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OpRequest {
    expected_rev: u64,
    op: Op,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OpResponse {
    pub rev: u64,
    pub created: Vec<EntityId>,
    pub removed: Vec<EntityId>,
}

async fn apply_op(State(s): State<AppState>, Path(id): Path<u64>, body: Bytes) -> Result<Json<OpResponse>, ApiError> {
    let entry = s.entry(id)?;
    let req: OpRequest = parse(&body)?;
    let mut e = entry.lock().unwrap();
    if req.expected_rev != e.rev() {
        return Err(ApiError::new(StatusCode::CONFLICT, "RevisionConflict", format!("model {id} is at revision {}", e.rev()))
            .with("current_rev", json!(e.rev())));
    }
    let mut next = e.head().clone();
    let applied = next.apply(&req.op, &s.catalog)?;
    e.revisions.push(next);
    Ok(Json(OpResponse { rev: e.rev(), created: applied.created, removed: applied.removed }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DisplayQuery {
    rev: Option<u64>,
    scale: Option<u32>,
    #[serde(default)]
    overall: bool,
}

async fn display(State(s): State<AppState>, Path(id): Path<u64>, Query(q): Query<DisplayQuery>) -> Result<Response, ApiError> {
    let (m, rev) = s.snapshot(id, q.rev)?;
    let opts = PlanOptions { scale: q.scale.unwrap_or(100), overall: q.overall, ..PlanOptions::default() };
    let list = generate_plan_display(&m, &opts)?;
    let mut r = Json(list).into_response();
    r.headers_mut().insert(REVISION_HEADER, HeaderValue::from(rev));
    Ok(r)
}

/// What `/preview` can show without committing anything.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "preview", rename_all = "snake_case", deny_unknown_fields)]
pub enum PreviewRequest {
    /// Where an opening would snap with the cursor at `cursor`.
    SnapOpening { cursor: Point, params: OpeningParams },
    /// The primitives an op would add.
    Op { op: Op },
    /// A section whose plan references are model ids of this service.
    Section { spec: SectionSpec },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PreviewResponse {
    pub rev: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement: Option<SnapResult>,
    pub ghost: DisplayList,
}

/// Display items owned by `ids` after `m` was changed.
fn ghost_of(m: &Model, ids: &[EntityId]) -> Result<DisplayList, ApiError> {
    let full = generate_plan_display(m, &PlanOptions::default())?;
    Ok(DisplayList { items: full.items.into_iter().filter(|i| i.owner.is_some_and(|o| ids.contains(&o))).collect() })
}

async fn preview(State(s): State<AppState>, Path(id): Path<u64>, body: Bytes) -> Result<Json<PreviewResponse>, ApiError> {
    let (m, rev) = s.snapshot(id, None)?;
    let req: PreviewRequest = parse(&body)?;
    match req {
        PreviewRequest::SnapOpening { cursor, params } => {
            let width = match (params.width_mm, &params.mark) {
                (Some(w), _) => w,
                (None, Some(mark)) => s
                    .catalog
                    .lookup(Family::Opening, mark)
                    .map(|r| r.dims.first())
                    .ok_or_else(|| ModelError::UnknownMark { family: Family::Opening, name: mark.clone() })?,
                (None, None) => return Err(ModelError::InvalidParameter { entity: None, message: "opening width is required for unmarked openings".into() }.into()),
            };
            let placement = m.snap_opening_preview(cursor, width);
            let ghost = match placement {
                SnapResult::Placement { partition, offset_mm, rot180, mirrored, .. } => {
                    let mut g = m.clone();
                    let params = OpeningParams { rot180: params.rot180 ^ rot180, mirrored: params.mirrored ^ mirrored, ..params };
                    let new = g.place_opening(partition, offset_mm, &params, &s.catalog)?;
                    ghost_of(&g, &[new])?
                }
                SnapResult::NoTarget => DisplayList::new(),
            };
            Ok(Json(PreviewResponse { rev, placement: Some(placement), ghost }))
        }
        PreviewRequest::Op { op } => {
            let mut g = m;
            let applied = g.apply(&op, &s.catalog)?;
            Ok(Json(PreviewResponse { rev, placement: None, ghost: ghost_of(&g, &applied.created)? }))
        }
        PreviewRequest::Section { spec } => {
            let mut plans = BTreeMap::new();
            for r in spec.plan_refs() {
                let pid: u64 = r.parse().map_err(|_| ApiError::bad_request(format!("plan reference `{r}` is not a model id")))?;
                plans.insert(r.to_string(), s.snapshot(pid, None)?.0);
            }
            let out = generate_section_display(&spec, &plans)?;
            Ok(Json(PreviewResponse { rev, placement: None, ghost: out.display }))
        }
    }
}

async fn catalog_family(State(s): State<AppState>, Path(family): Path<String>) -> Result<Response, ApiError> {
    let f: Family = family.parse().map_err(|e: String| ApiError::not_found(e))?;
    let records: Vec<_> = s.catalog.family(f).cloned().collect();
    Ok(Json(records).into_response())
}

pub fn app(state: AppState) -> Router {
    Router::new()
        .route("/models", post(create_model))
        .route("/models/:id", get(get_model))
        .route("/models/:id/ops", post(apply_op))
        .route("/models/:id/display", get(display))
        .route("/models/:id/preview", post(preview))
        .route("/catalog/:family", get(catalog_family))
        .with_state(state)
}
