"""HTTP client used by the CLI.

Talks to a remote server when given a base URL, otherwise mounts the
FastAPI app in-process over an ASGI transport; either way every request
goes through the same JSON contract the web UI uses.
"""

from __future__ import annotations

import asyncio

import httpx


class ServiceError(RuntimeError):
    def __init__(self, status_code: int, detail: str):
        self.status_code = status_code
        self.detail = detail
        super().__init__(f"service returned {status_code}: {detail}")


class ServiceClient:
    def __init__(self, base_url: str | None = None, app=None):
        if (base_url is None) == (app is None):
            raise ValueError("pass exactly one of base_url or app")
        self._app = app
        self._base_url = base_url or "http://expertnet.internal"

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        if self._app is not None:
            transport = httpx.ASGITransport(app=self._app)

            async def go():
                async with httpx.AsyncClient(
                    transport=transport, base_url=self._base_url
                ) as client:
                    return await client.request(method, path, **kwargs)

            return asyncio.run(go())
        with httpx.Client(base_url=self._base_url, timeout=30.0) as client:
            return client.request(method, path, **kwargs)

    def _json(self, method: str, path: str, **kwargs) -> dict:
        response = self._request(method, path, **kwargs)
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ServiceError(response.status_code, str(detail))
        return response.json()

    def categorize(self, text: str) -> list[dict]:
        return self._json("POST", "/categorize", json={"text": text})["suggestions"]

    def experts(self, category: str, status: str | None = None, k: int = 20) -> list[dict]:
        params = {"category": category, "k": k}
        if status:
            params["status"] = status
        return self._json("GET", "/experts", params=params)["results"]

    def person(self, person_id: str) -> dict:
        return self._json("GET", f"/person/{person_id}")

    def vote(self, person_id: str, delta: int, voter_token: str) -> int:
        body = {"person_id": person_id, "delta": delta, "voter_token": voter_token}
        return self._json("POST", "/vote", json=body)["tally"]

    def stats(self) -> dict:
        return self._json("GET", "/stats")
