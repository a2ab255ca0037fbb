void reverse(char *line)
{
    int l = 0, r = strlen(line) - 1;
    char ch;
    while (l < r) {
        ch = line[l];
        line[l] = line[r];
        line[r] = ch;
        l++;
        r--;
    }
}

int main()
{
    char line[256];
    scanf("%s", line);
    reverse(line);
    printf("%s\n", line);
    return 0;
}
