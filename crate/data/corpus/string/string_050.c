int main()
{
    char line[256], c;
    int l, r;
    scanf("%s", line);
    for (l = 0, r = strlen(line) - 1; l < r; l++, r--) {
        c = line[l];
        line[l] = line[r];
        line[r] = c;
    }
    puts(line);
    return 0;
}
