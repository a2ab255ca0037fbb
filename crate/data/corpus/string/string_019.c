int main()
{
    char line[500];
    int len, ok = 1;
    int idx;
    scanf("%s", line);
    len = strlen(line);
    idx = 0;
    while (idx < len / 2) {
        if (line[idx] != line[len - 1 - idx]) {
        ok = 0;
        break;
        }
        idx++;
    }
    printf("%s\n", ok ? "YES" : "NO");
    return 0;
}
