// Queries the analysis API in-process. Run `goishi serve --port 8080` for a
// real server; this example drives the same router without binding a socket.
//
//     cargo run --example analysis_service

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use tower::ServiceExt;

use goishi::service::{router, AppState};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let state = AppState::ready(64)?;
    let runtime = tokio::runtime::Runtime::new()?;
    let mut out = String::new();
    for uri in [
        "/api/health",
        "/api/analyze?x=1&y=1&z=1&convention=normal",
        "/api/engine-move?x=0&y=0&z=5&convention=misere",
        "/api/engine-move?x=0&y=0&z=0&convention=normal",
    ] {
        let response = runtime.block_on(router(state.clone()).oneshot(Request::get(uri).body(Body::empty())?))?;
        let status = response.status();
        let body = runtime.block_on(response.into_body().collect())?.to_bytes();
        out.push_str(&format!("GET {uri}\n  {status} {}\n", String::from_utf8_lossy(&body)));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
