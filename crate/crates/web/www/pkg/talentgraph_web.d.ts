/* tslint:disable */
/* eslint-disable */

/**
 * Parsed record and diagnostics as JSON.
 */
export function parseResume(text: string, lexicon: string): string;

/**
 * `request` is JSON: `{resumes, query, lexicon, gazetteer, lambda?, cap?}`.
 */
export function rank(request: string): string;

export function sampleGazetteer(): string;

export function sampleLexicon(): string;

/**
 * Sample resumes as a JSON array of strings.
 */
export function sampleResumes(): string;

export function scoreDescription(details: string, lexicon: string, gazetteer: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly parseResume: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly rank: (a: number, b: number) => [number, number, number, number];
    readonly sampleGazetteer: () => [number, number];
    readonly sampleLexicon: () => [number, number];
    readonly sampleResumes: () => [number, number];
    readonly scoreDescription: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
