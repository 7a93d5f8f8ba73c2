use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::Value;
use tower::ServiceExt;

use goishi::service::{router, AnalysisResponse, AppState};
use goishi::{moves, Outcome, Position};

async fn get(state: &Arc<AppState>, uri: &str) -> (StatusCode, Value) {
    let response = router(Arc::clone(state))
        .oneshot(Request::get(uri).header("origin", "http://localhost:5173").body(Body::empty()).unwrap())
        .await
        .unwrap();
    let status = response.status();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap())
}

fn ready() -> Arc<AppState> {
    AppState::ready(32).unwrap()
}

#[tokio::test]
async fn analyze_p_position() {
    let state = ready();
    let (status, body) = get(&state, "/api/analyze?x=5&y=3&z=4&convention=normal").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["outcome"], "P");
    assert_eq!(body["auxValue"], 2);
    assert!(body["winningMove"].is_null());
    let r: AnalysisResponse = serde_json::from_value(body).unwrap();
    assert!(r.moves.iter().all(|m| m.outcome == Outcome::N));
    let expected: Vec<Position> = moves(Position::new(5, 3, 4)).into_iter().map(|m| m.to).collect();
    assert_eq!(r.moves.iter().map(|m| m.to).collect::<Vec<_>>(), expected);
}

#[tokio::test]
async fn analyze_n_position_and_terminal() {
    let state = ready();
    let (_, body) = get(&state, "/api/analyze?x=1&y=1&z=1&convention=normal").await;
    assert_eq!(body["outcome"], "N");
    assert_eq!(body["winningMove"], serde_json::json!({"x": 0, "y": 1, "z": 1}));

    let (status, body) = get(&state, "/api/analyze?x=0&y=0&z=0&convention=normal").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["outcome"], "P");
    assert_eq!(body["moves"], serde_json::json!([]));
}

#[tokio::test]
async fn every_n_position_lists_a_p_option() {
    let state = ready();
    for (x, y, z) in [(3, 3, 3), (0, 0, 5), (7, 2, 9), (4, 0, 4), (10, 10, 10)] {
        for conv in ["normal", "misere"] {
            let (_, body) = get(&state, &format!("/api/analyze?x={x}&y={y}&z={z}&convention={conv}")).await;
            let r: AnalysisResponse = serde_json::from_value(body).unwrap();
            let has_p = r.moves.iter().any(|m| m.outcome == Outcome::P);
            assert_eq!(has_p, r.outcome == Outcome::N, "({x},{y},{z}) {conv}");
            assert_eq!(r.winning_move.is_none(), r.outcome == Outcome::P);
        }
    }
}

#[tokio::test]
async fn engine_move_examples() {
    let state = ready();
    let (status, body) = get(&state, "/api/engine-move?x=0&y=0&z=5&convention=misere").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, serde_json::json!({"move": {"x": 1, "y": 0, "z": 0}}));

    let (_, body) = get(&state, "/api/engine-move?x=2&y=1&z=2&convention=normal").await;
    assert_eq!(body, serde_json::json!({"move": {"x": 2, "y": 0, "z": 2}}));

    for conv in ["normal", "misere"] {
        let (status, body) = get(&state, &format!("/api/engine-move?x=0&y=0&z=0&convention={conv}")).await;
        assert_eq!(status, StatusCode::CONFLICT);
        assert!(body["error"].is_string());
    }
}

#[tokio::test]
async fn engine_moves_are_legal() {
    let state = ready();
    for x in 0..6 {
        for y in 0..6 {
            for z in 0..6 {
                let g = Position::new(x, y, z);
                if g.is_terminal() {
                    continue;
                }
                let (_, body) = get(&state, &format!("/api/engine-move?x={x}&y={y}&z={z}&convention=misere")).await;
                let to: Position = serde_json::from_value(body["move"].clone()).unwrap();
                assert!(moves(g).iter().any(|m| m.to == to), "{g} -> {to}");
            }
        }
    }
}

#[tokio::test]
async fn bad_requests() {
    let state = ready();
    let (status, _) = get(&state, "/api/analyze?x=-1&y=0&z=0").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = get(&state, "/api/analyze?x=a&y=0&z=0").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = get(&state, "/api/analyze?x=1&y=0&z=0&convention=sideways").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, body) = get(&state, "/api/analyze?x=32&y=0&z=0").await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["maxN"], 32);
    assert!(body["error"].as_str().unwrap().contains("32"));
}

#[tokio::test]
async fn health_lifecycle() {
    let state = AppState::warming(24);
    let (status, body) = get(&state, "/api/health").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "warming");
    assert_eq!(body["maxN"], 24);
    let (status, _) = get(&state, "/api/analyze?x=1&y=1&z=1").await;
    assert_eq!(status, StatusCode::SERVICE_UNAVAILABLE);

    state.build().unwrap();
    let (_, body) = get(&state, "/api/health").await;
    assert_eq!(body["status"], "ready");
    assert_eq!(body["builtTables"], serde_json::json!(["GM1", "GM1STAR"]));
}

#[tokio::test]
async fn responses_are_stateless() {
    let state = ready();
    let uri = "/api/analyze?x=6&y=2&z=9&convention=misere";
    let first = get(&state, uri).await;
    let _ = get(&state, "/api/engine-move?x=6&y=2&z=9&convention=misere").await;
    assert_eq!(first, get(&state, uri).await);
}

#[tokio::test]
async fn cors_header_is_present() {
    let response = router(ready())
        .oneshot(
            Request::get("/api/health")
                .header("origin", "http://localhost:5173")
                .body(Body::empty())
                .unwrap(),
        )
        .await
        .unwrap();
    assert_eq!(response.headers()["access-control-allow-origin"], "*");
}
