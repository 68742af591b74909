// UI state helpers kept free of DOM concerns so they test in isolation.

export const STATUSES = ["professor", "postdoc", "phd_student", "other"] as const;
export type Status = (typeof STATUSES)[number];

export type StatusChecks = Record<Status, boolean>;

export function emptyChecks(): StatusChecks {
  return { professor: false, postdoc: false, phd_student: false, other: false };
}

// Checked boxes become the comma-joined `status` parameter in fixed
// order; no boxes checked means no filtering at all.
export function statusParam(checks: StatusChecks): string | undefined {
  const chosen = STATUSES.filter((s) => checks[s]);
  return chosen.length ? chosen.join(",") : undefined;
}

const TOKEN_KEY = "expertnet.voter_token";

// 128 random bits as 32 hex chars, generated once and kept client-side;
// the anonymous identity the vote endpoint sees.
export function ensureVoterToken(
  storage: Pick<Storage, "getItem" | "setItem">,
  randomByte: () => number = () => Math.floor(Math.random() * 256),
): string {
  const existing = storage.getItem(TOKEN_KEY);
  if (existing) return existing;
  let token = "";
  for (let i = 0; i < 16; i++) {
    token += randomByte().toString(16).padStart(2, "0");
  }
  storage.setItem(TOKEN_KEY, token);
  return token;
}

export interface UiState {
  query: string;
  checks: StatusChecks;
  suggestions: import("./api").Suggestion[];
  selectedCategory: string | null;
  results: import("./api").ExpertRow[];
  // last server-acknowledged tally per person; never invented locally
  tallies: Map<string, number>;
  unavailable: Set<string>;
  voterToken: string;
}

export function initialState(voterToken: string): UiState {
  return {
    query: "",
    checks: emptyChecks(),
    suggestions: [],
    selectedCategory: null,
    results: [],
    tallies: new Map(),
    unavailable: new Set(),
    voterToken,
  };
}
