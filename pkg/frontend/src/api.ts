// Typed client for the expertnet JSON API. The UI talks to nothing else.

export interface Suggestion {
  category_id: string;
  label: string;
  score: number;
  rank: number;
}

export interface ExpertRow {
  person_id: string;
  name: string;
  status: string;
  score: number;
  rank: number;
}

export interface PublicationRow {
  pub_id: string;
  title: string;
  journal: string | null;
  category_id: string | null;
  reader_count: number;
}

export interface PersonDetail {
  name: string;
  status: string;
  research_interests: string[];
  publications: PublicationRow[];
  vote_tally: number;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function parseError(resp: Response): Promise<ApiError> {
  let detail = resp.statusText;
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path);
    if (!resp.ok) throw await parseError(resp);
    return (await resp.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const resp = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) throw await parseError(resp);
    return (await resp.json()) as T;
  }

  async categorize(text: string): Promise<Suggestion[]> {
    const body = await this.postJson<{ suggestions: Suggestion[] }>("/categorize", { text });
    return body.suggestions;
  }

  async experts(category: string, status?: string, k = 20): Promise<ExpertRow[]> {
    const params = new URLSearchParams({ category, k: String(k) });
    if (status) params.set("status", status);
    const body = await this.getJson<{ results: ExpertRow[] }>(`/experts?${params}`);
    return body.results;
  }

  async person(personId: string): Promise<PersonDetail> {
    return this.getJson<PersonDetail>(`/person/${encodeURIComponent(personId)}`);
  }

  async vote(personId: string, delta: 1 | -1, voterToken: string): Promise<number> {
    const body = await this.postJson<{ tally: number }>("/vote", {
      person_id: personId,
      delta,
      voter_token: voterToken,
    });
    return body.tally;
  }
}
