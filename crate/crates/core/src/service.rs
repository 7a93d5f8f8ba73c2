//! Stateless JSON analysis API.
//!
//! Routes:
//!
//! * `GET /api/analyze?x=&y=&z=&convention=`: outcome, table value, every
//!   legal move with its outcome class, and the winning move if any.
//! * `GET /api/engine-move?x=&y=&z=&convention=`: the engine's reply.
//! * `GET /api/health`: build status and capacity.
//!
//! The tables are built once on a background thread at startup. Until they are
//! ready, health reports `warming` and the analysis routes answer 503.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::{Arc, OnceLock};

use axum::extract::{Query, State};
use axum::http::{Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::cors::{Any, CorsLayer};

use crate::game::{Engine, Position};
use crate::outcome::{Convention, Outcome};
use crate::table::{SeedSpec, TableBuilder};

/// Shared, read-only service state.
pub struct AppState {
    max_n: usize,
    engine: OnceLock<Engine>,
}

impl AppState {
    /// State whose tables have not been built yet.
    pub fn warming(max_n: usize) -> Arc<Self> {
        Arc::new(AppState {
            max_n,
            engine: OnceLock::new(),
        })
    }

    /// Builds the tables synchronously.
    pub fn ready(max_n: usize) -> Result<Arc<Self>, crate::GameError> {
        let state = Self::warming(max_n);
        state.build()?;
        Ok(state)
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn is_ready(&self) -> bool {
        self.engine.get().is_some()
    }

    /// Builds both tables; a no-op once built.
    pub fn build(&self) -> Result<(), crate::GameError> {
        if self.engine.get().is_none() {
            let builder = TableBuilder::with_max_n(self.max_n);
            let engine = Engine::with_builder(&builder, self.max_n)?;
            let _ = self.engine.set(engine);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveEntry {
    pub to: Position,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisResponse {
    pub position: Position,
    pub convention: Convention,
    pub outcome: Outcome,
    pub aux_value: i32,
    pub moves: Vec<MoveEntry>,
    pub winning_move: Option<Position>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineMoveResponse {
    #[serde(rename = "move")]
    pub mv: Option<Position>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HealthResponse {
    pub status: String,
    pub built_tables: Vec<String>,
    pub max_n: usize,
}

/// An error response with a JSON `{"error": ...}` body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApiError {
    pub status: StatusCode,
    pub message: String,
    pub max_n: Option<usize>,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
            max_n: None,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = match self.max_n {
            Some(max_n) => json!({ "error": self.message, "maxN": max_n }),
            None => json!({ "error": self.message }),
        };
        (self.status, Json(body)).into_response()
    }
}

/// Validated query: a position within capacity and a convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionQuery {
    pub position: Position,
    pub convention: Convention,
}

impl PositionQuery {
    /// Parses `x`, `y`, `z` and `convention` (default `normal`). Malformed
    /// values are 400; coordinates at or above `max_n` are 422.
    pub fn parse(params: &HashMap<String, String>, max_n: usize) -> Result<Self, ApiError> {
        let coord = |name: &str| -> Result<usize, ApiError> {
            let raw = params
                .get(name)
                .ok_or_else(|| ApiError::new(StatusCode::BAD_REQUEST, format!("missing parameter `{name}`")))?;
            raw.trim().parse::<usize>().map_err(|_| {
                ApiError::new(
                    StatusCode::BAD_REQUEST,
                    format!("parameter `{name}` must be a nonnegative integer, got `{raw}`"),
                )
            })
        };
        let position = Position::new(coord("x")?, coord("y")?, coord("z")?);
        let convention = match params.get("convention") {
            None => Convention::Normal,
            Some(raw) => raw
                .parse()
                .map_err(|e: crate::ParseConventionError| ApiError::new(StatusCode::BAD_REQUEST, e.to_string()))?,
        };
        if position.x >= max_n || position.y >= max_n || position.z >= max_n {
            return Err(ApiError {
                status: StatusCode::UNPROCESSABLE_ENTITY,
                message: format!("every block must hold fewer than {max_n} stones (max-n is {max_n})"),
                max_n: Some(max_n),
            });
        }
        Ok(PositionQuery { position, convention })
    }
}

/// Full analysis of one position.
pub fn analyze(engine: &Engine, q: PositionQuery) -> AnalysisResponse {
    let PositionQuery { position, convention } = q;
    let outcome = engine.outcome(position, convention).expect("query within capacity");
    let aux_value = engine.aux_value(position, convention).expect("query within capacity");
    let moves = engine
        .classified_moves(position, convention)
        .expect("query within capacity")
        .into_iter()
        .map(|(m, outcome)| MoveEntry { to: m.to, outcome })
        .collect();
    let winning_move = engine
        .winning_move(position, convention)
        .expect("query within capacity")
        .map(|m| m.to);
    AnalysisResponse {
        position,
        convention,
        outcome,
        aux_value,
        moves,
        winning_move,
    }
}

fn engine_of(state: &AppState) -> Result<&Engine, ApiError> {
    state
        .engine
        .get()
        .ok_or_else(|| ApiError::new(StatusCode::SERVICE_UNAVAILABLE, "tables are still building"))
}

async fn get_analyze(
    State(state): State<Arc<AppState>>,
    Query(params): Query<HashMap<String, String>>,
) -> Result<Json<AnalysisResponse>, ApiError> {
    let q = PositionQuery::parse(&params, state.max_n)?;
    let engine = engine_of(&state)?;
    Ok(Json(analyze(engine, q)))
}

async fn get_engine_move(
    State(state): State<Arc<AppState>>,
    Query(params): Query<HashMap<String, String>>,
) -> Result<Json<EngineMoveResponse>, ApiError> {
    let q = PositionQuery::parse(&params, state.max_n)?;
    let engine = engine_of(&state)?;
    if q.position.is_terminal() {
        return Err(ApiError::new(StatusCode::CONFLICT, "the game is over: no stones left"));
    }
    let mv = engine
        .engine_move(q.position, q.convention)
        .expect("query within capacity")
        .map(|m| m.to);
    Ok(Json(EngineMoveResponse { mv }))
}

async fn get_health(State(state): State<Arc<AppState>>) -> Json<HealthResponse> {
    let ready = state.is_ready();
    let built_tables = if ready {
        vec![SeedSpec::GM1.to_string(), SeedSpec::GM1Star.to_string()]
    } else {
        Vec::new()
    };
    Json(HealthResponse {
        status: if ready { "ready" } else { "warming" }.to_string(),
        built_tables,
        max_n: state.max_n,
    })
}

pub fn router(state: Arc<AppState>) -> Router {
    let cors = CorsLayer::new().allow_origin(Any).allow_methods([Method::GET]);
    Router::new()
        .route("/api/analyze", get(get_analyze))
        .route("/api/engine-move", get(get_engine_move))
        .route("/api/health", get(get_health))
        .layer(cors)
        .with_state(state)
}

/// Binds `addr`, starts building tables in the background and serves until
/// the process is stopped.
pub async fn serve(addr: SocketAddr, max_n: usize) -> std::io::Result<()> {
    let state = AppState::warming(max_n);
    let builder_state = Arc::clone(&state);
    std::thread::spawn(move || {
        if let Err(e) = builder_state.build() {
            eprintln!("table build failed: {e}");
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state)).await
}
